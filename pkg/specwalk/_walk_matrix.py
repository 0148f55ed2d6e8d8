# encoding: utf-8

from functools import lru_cache

import numpy as np

from ._const import DEFAULT_SUPPORT_TOLERANCE, EXACT_SUPPORT_CROSSCHECK_LIMIT
from ._exact import char_poly, char_poly_of_deleted
from ._logger import logger
from ._matrix import BigRationalMatrix, modular_rank
from .error import DimensionMismatchError, InvariantViolation


class WalkMatrix(object):
    """
    Integer matrix with columns ``z, Az, ..., A^(n-1) z``.
    """

    @property
    def columns(self):
        return self.__columns

    @property
    def rank(self):
        if self.__rank is None:
            self.__rank = self.to_rational().rank()

        return self.__rank

    def __init__(self, columns):
        self.__columns = tuple(tuple(column) for column in columns)
        self.__rank = None

    def __repr__(self):
        return "WalkMatrix(order={:d}, rank={:d})".format(len(self.__columns), self.rank)

    def annihilated_by(self, polynomial):
        """
        Return |True| if ``p(A) z = 0`` for an integer polynomial ``p`` of degree
        below the number of columns.
        """

        coeffs = polynomial.coeffs
        if len(coeffs) > len(self.__columns):
            raise ValueError("polynomial degree exceeds the Krylov columns")

        return not any(
            sum(c * column[v] for c, column in zip(coeffs, self.__columns))
            for v in range(len(self.__columns))
        )

    def certified_rank(self, polynomial):
        """
        Rank when it equals ``deg(p)`` for an integer polynomial ``p``: ``p(A) z = 0``
        bounds the rank from above and independence of the first ``deg(p)`` columns
        modulo a large prime bounds it from below. Otherwise the exact rank.
        """

        degree = polynomial.degree
        order = len(self.__columns)
        if 0 <= degree <= order and self.__rank is None:
            bounded = degree == order or self.annihilated_by(polynomial)
            if bounded and modular_rank(self.__columns[:degree]) == degree:
                self.__rank = degree

        return self.rank

    def to_numpy(self):
        return np.array(self.__columns, dtype=object).T

    def to_rational(self):
        return BigRationalMatrix.from_columns(self.__columns, len(self.__columns))

    def gram(self):
        """
        ``M^T M``, whose ``(i, j)`` entry is ``z^T A^(i+j) z``.
        """

        return [[sum(x * y for x, y in zip(u, v)) for v in self.__columns] for u in self.__columns]


def _krylov_columns(graph, z, count):
    columns = []
    vector = list(z)
    for _k in range(count):
        columns.append(vector)
        vector = graph.walk_step(vector)

    return columns


def krylov_matrix(graph, z):
    """
    Walk matrix of an integer vector ``z``.
    """

    z = [int(value) for value in z]
    if len(z) != graph.order:
        raise DimensionMismatchError(
            "vector of length {:d} for order {:d}".format(len(z), graph.order)
        )

    return WalkMatrix(_krylov_columns(graph, z, graph.order))


def unit_vector(order, v, sign=1):
    vector = [0] * order
    vector[v] = sign

    return vector


def walk_matrix(graph, a):
    """
    :raises specwalk.UnknownVertexError: ``a`` is not a vertex.
    """

    graph.validate_vertex(a)

    return _walk_matrix(graph, int(a))


@lru_cache(maxsize=4096)
def _walk_matrix(graph, a):
    return krylov_matrix(graph, unit_vector(graph.order, a))


def support_polynomial(graph, a):
    """
    ``d_a = phi(X) / gcd(phi(X), phi(X \\ a))``, the square-free polynomial whose roots
    are the eigenvalue support of ``a``. Its degree is checked against the exact rank
    of the walk matrix on graphs of moderate order.

    :raises specwalk.UnknownVertexError: ``a`` is not a vertex.
    :raises specwalk.InvariantViolation: degree and walk-matrix rank disagree.
    """

    graph.validate_vertex(a)

    return _support_polynomial(graph, int(a))


@lru_cache(maxsize=4096)
def _support_polynomial(graph, a):
    phi = char_poly(graph)
    support = phi.exact_quotient(phi.gcd(char_poly_of_deleted(graph, [a]))).primitive()

    if graph.order <= EXACT_SUPPORT_CROSSCHECK_LIMIT:
        rank = walk_matrix(graph, a).certified_rank(support)
        if rank != support.degree:
            raise InvariantViolation(
                "support polynomial degree {:d} != walk matrix rank {:d} (vertex {:d})".format(
                    support.degree, rank, a
                )
            )

    return support


def numeric_support_matches(graph, decomp, a, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
    """
    Compare the numeric eigenvalue support of ``a`` with the roots of its exact
    support polynomial; a mismatch is logged and the exact answer stands.
    """

    support = support_polynomial(graph, a)
    numeric = [
        float(theta)
        for theta, weight in zip(decomp.eigenvalues, decomp.diagonal_weights(a))
        if weight > support_tolerance
    ]

    scale = max(1.0, decomp.spectral_radius) ** max(support.degree, 1)
    matches = len(numeric) == support.degree and all(
        abs(float(support.evaluate(theta))) <= 1e-6 * scale for theta in numeric
    )
    if not matches:
        logger.warning(
            "numeric support of vertex {:d} ({:d} eigenvalues) disagrees with the exact "
            "support polynomial of degree {:d}".format(a, len(numeric), support.degree)
        )

    return matches
