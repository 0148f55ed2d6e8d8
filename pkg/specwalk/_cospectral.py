# encoding: utf-8

from collections import namedtuple

import numpy as np

from ._const import BORDERLINE_RANGE, DEFAULT_SUPPORT_TOLERANCE, DEFAULT_VERDICT_TOLERANCE
from ._exact import char_poly, char_poly_of_deleted, closed_walk_counts, repeated_factor
from ._logger import logger
from ._poly import RationalFn
from ._spectral import eigen_decompose
from ._walk_matrix import support_polynomial
from .error import SameVertexError


CospectralTest = namedtuple("CospectralTest", "exact numeric deviation diagnostics")


class ParallelTest(object):
    """
    Parallel verdicts of a pair; ``reduced`` is ``phi(X \\ {a, b}) / phi(X)`` in lowest terms.
    """

    @property
    def exact(self):
        return self.__exact

    @property
    def numeric(self):
        return self.__numeric

    @property
    def determinants(self):
        return self.__determinants

    @property
    def reduced(self):
        if self.__reduced is None:
            self.__reduced = RationalFn(self.__numerator, self.__denominator)

        return self.__reduced

    def __init__(self, exact, numeric, determinants, numerator, denominator):
        self.__exact = exact
        self.__numeric = numeric
        self.__determinants = determinants
        self.__numerator = numerator
        self.__denominator = denominator
        self.__reduced = None

    def __repr__(self):
        return "ParallelTest(exact={}, numeric={})".format(self.__exact, self.__numeric)


def validate_pair(graph, a, b):
    graph.validate_vertex(a)
    graph.validate_vertex(b)
    if a == b:
        raise SameVertexError("pair requires two distinct vertices: a=b={:d}".format(a))


def _is_borderline(deviation):
    low, high = BORDERLINE_RANGE

    return low <= deviation <= high


def _reconcile(name, exact, numeric, deviation, tol):
    borderline = _is_borderline(deviation)
    if borderline:
        logger.warning(
            "{}: numeric deviation {:.3g} is borderline at tolerance {:.3g}, "
            "using the exact verdict".format(name, deviation, tol)
        )
    elif exact != numeric:
        logger.warning(
            "{}: numeric verdict {} disagrees with exact verdict {}".format(name, numeric, exact)
        )

    return borderline


def _module_orthogonality(walks_a, walks_b, order):
    # (e_a - e_b)^T A^k (e_a + e_b) = (A^k)_aa - (A^k)_bb for k < n
    return [x - y for x, y in zip(walks_a[:order], walks_b[:order])]


def are_cospectral(graph, a, b, decomp=None, tol=DEFAULT_VERDICT_TOLERANCE):
    """
    Cospectrality of ``a`` and ``b``.
    The exact verdict compares ``phi(X \\ a)`` with ``phi(X \\ b)``; the numeric verdict
    compares the diagonal entries of every spectral idempotent.

    :return: ``CospectralTest(exact, numeric, deviation, diagnostics)`` where
        ``diagnostics`` holds the Gram-matrix test (``M_a^T M_a == M_b^T M_b``) and the
        walk-module orthogonality test, both in integer arithmetic.
    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    """

    validate_pair(graph, a, b)
    if decomp is None:
        decomp = eigen_decompose(graph)

    exact = char_poly_of_deleted(graph, [a]) == char_poly_of_deleted(graph, [b])

    deviation = float(np.max(np.abs(decomp.diagonal_weights(a) - decomp.diagonal_weights(b))))
    numeric = deviation < tol

    borderline = _reconcile(
        "cospectral({:d}, {:d})".format(a, b), exact, numeric, deviation, tol
    )
    count = 2 * graph.order - 1
    walks_a = closed_walk_counts(graph, a, count)
    walks_b = closed_walk_counts(graph, b, count)
    diagnostics = {
        "gram_equal": walks_a == walks_b,
        "modules_orthogonal": not any(_module_orthogonality(walks_a, walks_b, graph.order)),
        "borderline": borderline,
    }

    return CospectralTest(exact, numeric, deviation, diagnostics)


def are_parallel(graph, a, b, decomp=None, tol=DEFAULT_VERDICT_TOLERANCE):
    """
    The exact verdict tests that every pole of ``phi(X \\ {a, b}) / phi(X)`` is simple,
    that is ``phi / psi`` divides ``phi(X \\ {a, b})``;
    the numeric verdict tests ``(E_r)_aa (E_r)_bb - (E_r)_ab ** 2 == 0`` for every ``r``.

    :return: ``ParallelTest(exact, numeric, determinants, ...)``
    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    """

    validate_pair(graph, a, b)
    if decomp is None:
        decomp = eigen_decompose(graph)

    numerator = char_poly_of_deleted(graph, [a, b])
    exact = repeated_factor(graph).divides(numerator)

    stacked = decomp.stacked
    determinants = (stacked[:, a, a] * stacked[:, b, b] - stacked[:, a, b] ** 2).tolist()
    deviation = max(abs(value) for value in determinants)
    numeric = deviation < tol
    _reconcile("parallel({:d}, {:d})".format(a, b), exact, numeric, deviation, tol)

    return ParallelTest(exact, numeric, determinants, numerator, char_poly(graph))


class PairVerdict(object):
    """
    Exact and numeric analysis of a vertex pair.
    ``sign_pattern`` has one entry per eigenvalue: ``1``/``-1`` on the eigenvalue
    support and |None| outside it; it is present only for strongly cospectral pairs.
    """

    @property
    def a(self):
        return self.__a

    @property
    def b(self):
        return self.__b

    @property
    def cospectral_exact(self):
        return self.__cospectral.exact

    @property
    def cospectral_numeric(self):
        return self.__cospectral.numeric

    @property
    def cospectral_deviation(self):
        return self.__cospectral.deviation

    @property
    def parallel_exact(self):
        return self.__parallel.exact

    @property
    def parallel_numeric(self):
        return self.__parallel.numeric

    @property
    def parallel_determinants(self):
        return self.__parallel.determinants

    @property
    def strongly_cospectral_exact(self):
        return self.__cospectral.exact and self.__parallel.exact

    @property
    def sc_numeric(self):
        return self.__sc_numeric

    @property
    def sc_deviation(self):
        return self.__sc_deviation

    @property
    def diagnostics(self):
        return self.__cospectral.diagnostics

    @property
    def borderline(self):
        return self.__borderline

    @property
    def sign_pattern(self):
        return self.__sign_pattern

    @property
    def symmetry_poly(self):
        return self.__symmetry_poly

    @property
    def support_poly_a(self):
        return self.__support_poly_a

    @property
    def support_poly_b(self):
        return self.__support_poly_b

    @property
    def eigenvalues(self):
        return self.__eigenvalues

    def __init__(
        self,
        a,
        b,
        cospectral,
        parallel,
        sc_numeric,
        sc_deviation,
        borderline,
        sign_pattern,
        symmetry_poly,
        support_poly_a,
        support_poly_b,
        eigenvalues,
    ):
        self.__a = a
        self.__b = b
        self.__cospectral = cospectral
        self.__parallel = parallel
        self.__sc_numeric = sc_numeric
        self.__sc_deviation = sc_deviation
        self.__borderline = borderline
        self.__sign_pattern = sign_pattern
        self.__symmetry_poly = symmetry_poly
        self.__support_poly_a = support_poly_a
        self.__support_poly_b = support_poly_b
        self.__eigenvalues = eigenvalues

    def __repr__(self):
        return "PairVerdict(a={:d}, b={:d}, cospectral={}, parallel={}, sc={})".format(
            self.__a,
            self.__b,
            self.cospectral_exact,
            self.parallel_exact,
            self.strongly_cospectral_exact,
        )

    def numeric_agrees(self):
        return (
            self.cospectral_exact == self.cospectral_numeric
            and self.parallel_exact == self.parallel_numeric
            and self.strongly_cospectral_exact == self.sc_numeric
        )

    def to_dict(self, mode="both"):
        result = {"a": self.__a, "b": self.__b}

        if mode in ("exact", "both"):
            result.update(
                {
                    "cospectral": self.cospectral_exact,
                    "parallel": self.parallel_exact,
                    "strongly_cospectral": self.strongly_cospectral_exact,
                    "support_poly_a": self.__support_poly_a.to_json(),
                    "support_poly_b": self.__support_poly_b.to_json(),
                    "gram_equal": self.diagnostics["gram_equal"],
                    "modules_orthogonal": self.diagnostics["modules_orthogonal"],
                    "sign_pattern": self.__sign_pattern,
                    "symmetry_poly": (
                        None if self.__symmetry_poly is None else self.__symmetry_poly.to_json()
                    ),
                }
            )
        if mode in ("numeric", "both"):
            result.update(
                {
                    "eigenvalues": [float(theta) for theta in self.__eigenvalues],
                    "cospectral_numeric": self.cospectral_numeric,
                    "cospectral_deviation": self.cospectral_deviation,
                    "parallel_numeric": self.parallel_numeric,
                    "parallel_determinants": list(self.parallel_determinants),
                    "strongly_cospectral_numeric": self.__sc_numeric,
                    "strongly_cospectral_deviation": self.__sc_deviation,
                    "borderline": self.__borderline,
                }
            )

        return result


def projection_deviation(decomp, a, b):
    """
    ``max_r min(|E_r e_a - E_r e_b|, |E_r e_a + E_r e_b|)``; zero iff ``a`` and ``b``
    are strongly cospectral.
    """

    columns_a = decomp.columns(a)
    columns_b = decomp.columns(b)

    return float(
        np.max(
            np.minimum(
                np.linalg.norm(columns_a - columns_b, axis=1),
                np.linalg.norm(columns_a + columns_b, axis=1),
            )
        )
    )


def sign_pattern(decomp, a, b, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
    """
    ``sign((E_r)_ab)`` on the eigenvalue support of ``a``, |None| elsewhere.
    """

    stacked = decomp.stacked

    return [
        (1 if off_diagonal > 0 else -1) if diagonal > support_tolerance else None
        for diagonal, off_diagonal in zip(stacked[:, a, a], stacked[:, a, b])
    ]


def are_strongly_cospectral(
    graph, a, b, decomp=None, tol=DEFAULT_VERDICT_TOLERANCE, with_symmetry=True
):
    """
    Strong cospectrality as cospectral and parallel, with the numeric projection
    comparison ``E_r e_a = +-E_r e_b`` as a cross-check.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    """

    from ._symmetry import symmetry_polynomial

    validate_pair(graph, a, b)
    if decomp is None:
        decomp = eigen_decompose(graph)

    cospectral = are_cospectral(graph, a, b, decomp=decomp, tol=tol)
    parallel = are_parallel(graph, a, b, decomp=decomp, tol=tol)
    exact = cospectral.exact and parallel.exact

    deviation = float(projection_deviation(decomp, a, b))
    numeric = deviation < tol
    borderline = (
        _reconcile("strongly_cospectral({:d}, {:d})".format(a, b), exact, numeric, deviation, tol)
        or cospectral.diagnostics["borderline"]
    )

    pattern = None
    symmetry = None
    if exact:
        pattern = sign_pattern(decomp, a, b)
        if with_symmetry:
            symmetry = symmetry_polynomial(graph, a, b)

    return PairVerdict(
        a,
        b,
        cospectral=cospectral,
        parallel=parallel,
        sc_numeric=numeric,
        sc_deviation=deviation,
        borderline=borderline,
        sign_pattern=pattern,
        symmetry_poly=symmetry,
        support_poly_a=support_polynomial(graph, a),
        support_poly_b=support_polynomial(graph, b),
        eigenvalues=decomp.eigenvalues,
    )
