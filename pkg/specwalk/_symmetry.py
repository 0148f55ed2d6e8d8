# encoding: utf-8

from fractions import Fraction

import numpy as np
from sympy import QQ, Poly, Rational

from ._cospectral import validate_pair
from ._exact import char_poly_of_deleted, matrix_polynomial, minimal_polynomial
from ._logger import logger
from ._matrix import BigRationalMatrix, solve_rational_system, to_rational_string
from ._poly import T
from ._spectral import eigen_decompose, walk_module_projection
from ._walk_matrix import support_polynomial, unit_vector, walk_matrix
from .error import InvariantViolation


def _to_fraction(value):
    return Fraction(int(value.p), int(value.q))


def _rational_poly(coeffs):
    return Poly(
        [Rational(c.numerator, c.denominator) for c in reversed(coeffs)] or [0], T, domain=QQ
    )


def _coefficients(poly):
    return [_to_fraction(c) for c in reversed(poly.all_coeffs())]


class SymmetryMatrix(object):
    """
    Rational polynomial ``p`` with ``Q = p(A)`` a symmetric involution commuting
    with ``A`` that maps ``e_a`` to ``e_b``.
    """

    @property
    def coefficients(self):
        return self.__coefficients

    @property
    def degree(self):
        return len(self.__coefficients) - 1

    @property
    def matrix(self):
        """
        ``Q = p(A)`` with :py:class:`fractions.Fraction` entries (``dtype=object``).
        """

        if self.__matrix is None:
            self.__matrix = matrix_polynomial(self.__coefficients, self.__adjacency)

        return self.__matrix

    def __init__(self, coefficients, adjacency):
        coefficients = [Fraction(c) for c in coefficients]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()

        self.__coefficients = tuple(coefficients)
        self.__adjacency = np.asarray(adjacency, dtype=int)
        self.__matrix = None

    def __repr__(self):
        return "SymmetryMatrix(p={})".format(self.to_sympy().as_expr())

    def to_sympy(self):
        return _rational_poly(self.__coefficients)

    def to_numpy(self):
        return self.matrix.astype(float)

    def to_rational(self):
        return BigRationalMatrix(self.matrix.tolist())

    def evaluate(self, x):
        value = 0 * x
        for c in reversed(self.__coefficients):
            value = value * x + c

        return value

    def maps(self, a, b):
        return all(value == int(v == b) for v, value in enumerate(self.matrix[:, a]))

    def is_involution(self):
        return self.to_rational().dot(self.to_rational()).is_identity()

    def commutes_with_adjacency(self):
        adjacency = BigRationalMatrix.from_numpy_int(self.__adjacency)
        q = self.to_rational()

        return q.dot(adjacency) == adjacency.dot(q)

    def is_symmetric(self):
        return self.to_rational().is_symmetric()

    def is_permutation(self):
        matrix = self.matrix
        if not all(value in (0, 1) for value in matrix.flat):
            return False

        return bool(np.all(matrix.sum(axis=0) == 1) and np.all(matrix.sum(axis=1) == 1))

    def trace(self):
        return sum(self.matrix[v, v] for v in range(self.matrix.shape[0]))

    def to_json(self):
        return [to_rational_string(c) for c in self.__coefficients]


def symmetry_polynomial(graph, a, b):
    """
    Rational polynomial ``p`` of degree below ``deg(psi)`` with ``p(A) e_a = e_b`` and
    ``p**2 == 1 (mod psi)``, or |None| when ``a`` and ``b`` are not strongly cospectral.

    The minimal-degree solution of ``sum(c_k A^k e_a) = e_b`` is unique on the
    eigenvalue support of ``a``; it is lifted so that ``p == 1`` at the eigenvalues
    outside the support, which makes ``p(A)`` an involution.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    :raises specwalk.InvariantViolation: the lifted matrix fails exact verification.
    """

    validate_pair(graph, a, b)

    if char_poly_of_deleted(graph, [a]) != char_poly_of_deleted(graph, [b]):
        return None

    support = support_polynomial(graph, a)
    columns = walk_matrix(graph, a).columns[: support.degree]
    solution = solve_rational_system(
        BigRationalMatrix.from_columns(columns, graph.order), unit_vector(graph.order, b)
    )
    if solution is None:
        logger.debug("e_{:d} is not in the walk module of e_{:d}".format(b, a))
        return None

    p = _rational_poly(solution)
    support_q = support.to_sympy(QQ)
    if not (p ** 2 - 1).rem(support_q).is_zero:
        logger.debug("p**2 != 1 on the support of {:d}".format(a))
        return None

    psi, _disc = minimal_polynomial(graph)
    psi_q = psi.to_sympy(QQ)
    cofactor = psi_q.exquo(support_q)
    s, t, _h = support_q.gcdex(cofactor)
    lifted = (p * t * cofactor + s * support_q).rem(psi_q)

    symmetry = SymmetryMatrix(_coefficients(lifted), graph.adjacency_matrix())
    if not symmetry.maps(a, b) or not symmetry.is_involution():
        raise InvariantViolation(
            "symmetry polynomial for ({:d}, {:d}) fails exact verification".format(a, b)
        )

    return symmetry


def cospectral_rotation(graph, a, b, decomp=None, tol=1e-8):
    """
    Orthogonal ``Q = I - 2 P`` where ``P`` projects onto the walk module of
    ``e_a - e_b``; ``Q`` commutes with ``A``, ``Q**2 = I`` and ``Q e_a = e_b``.
    |None| when ``a`` and ``b`` are not cospectral.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    """

    validate_pair(graph, a, b)

    if char_poly_of_deleted(graph, [a]) != char_poly_of_deleted(graph, [b]):
        return None

    if decomp is None:
        decomp = eigen_decompose(graph)

    z = np.zeros(graph.order)
    z[a] = 1.0
    z[b] = -1.0
    rotation = np.identity(graph.order) - 2 * walk_module_projection(decomp, z)

    adjacency = decomp.adjacency
    errors = [
        np.linalg.norm(rotation.dot(rotation) - np.identity(graph.order)),
        np.linalg.norm(rotation.dot(adjacency) - adjacency.dot(rotation)),
        np.linalg.norm(rotation[:, a] - np.eye(graph.order)[:, b]),
    ]
    if max(errors) > tol:
        raise InvariantViolation(
            "cospectral rotation for ({:d}, {:d}) has errors {}".format(a, b, errors)
        )

    return rotation


def sign_symmetry(decomp, signs):
    """
    ``S = sum(sigma_r E_r)`` with |None| signs read as ``+1``; ``S`` is an orthogonal
    involution in the commutant of ``A``.
    """

    if len(signs) != len(decomp):
        raise ValueError(
            "expected {:d} signs, got {:d}".format(len(decomp), len(signs))
        )

    return sum((1 if sign is None else sign) * E for sign, E in zip(signs, decomp.idempotents))
