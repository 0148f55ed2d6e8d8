# encoding: utf-8

from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ._const import ADJUGATE_MAX_ORDER, EXACT_SUPPORT_CROSSCHECK_LIMIT
from ._graph import delete_vertices
from ._logger import logger
from ._matrix import BigRationalMatrix
from ._poly import IntPoly, RationalFn, discriminant, square_free_part
from .error import InvariantViolation, ZeroDenominatorError


@lru_cache(maxsize=1024)
def char_poly(graph):
    """
    ``det(tI - A)`` by the division-free Berkowitz algorithm over the integers.
    The graph on no vertices has characteristic polynomial ``1``.
    """

    n = graph.order
    if n == 0:
        return IntPoly([1])

    matrix = DomainMatrix(
        [[ZZ(value) for value in row] for row in graph.adjacency_rows()], (n, n), ZZ
    )
    coeffs = [int(c) for c in matrix.charpoly()]

    logger.debug("characteristic polynomial of order {:d}".format(n))

    return IntPoly(reversed(coeffs))


@lru_cache(maxsize=256)
def adjugate_coefficients(graph):
    """
    ``adj(tI - A) = sum(B_k * t**(n-1-k))`` by the Faddeev-LeVerrier recurrence
    ``B_0 = I``, ``B_k = A B_(k-1) + c_k I`` on the coefficients ``c_k`` of ``phi``.

    :return: tuple of ``n`` integer matrices (``dtype=object``); entry ``j`` is the
        coefficient of ``t**j``.
    :raises specwalk.InvariantViolation: ``A B_(n-1) + c_n I != 0``.
    """

    n = graph.order
    if n == 0:
        return ()

    phi = char_poly(graph).coeffs
    adjacency = graph.adjacency_matrix().astype(object)
    identity = np.identity(n, dtype=int).astype(object)
    current = identity
    blocks = [current]
    for k in range(1, n):
        current = adjacency.dot(current) + identity * phi[n - k]
        blocks.append(current)

    if np.any(adjacency.dot(current) + identity * phi[0] != 0):
        raise InvariantViolation("adjugate recurrence does not close at order {:d}".format(n))

    return tuple(reversed(blocks))


def _adjugate_entry(graph, u, v):
    return IntPoly(block[u, v] for block in adjugate_coefficients(graph))


@lru_cache(maxsize=8192)
def _deleted_char_poly(graph, vertices):
    if not vertices:
        return char_poly(graph)

    if graph.order > ADJUGATE_MAX_ORDER:
        subgraph, _mapping = delete_vertices(graph, vertices)
        return char_poly(subgraph)

    if len(vertices) == 1:
        # (a, a) cofactor of tI - A
        a = vertices[0]
        return _adjugate_entry(graph, a, a)

    if len(vertices) == 2:
        # phi(X \ {a, b}) phi(X) = adj_aa adj_bb - adj_ab ** 2
        a, b = vertices
        off_diagonal = _adjugate_entry(graph, a, b)
        minor = (
            _adjugate_entry(graph, a, a) * _adjugate_entry(graph, b, b)
            - off_diagonal * off_diagonal
        )
        return minor.exact_quotient(char_poly(graph))

    subgraph, _mapping = delete_vertices(graph, vertices)

    return char_poly(subgraph)


def char_poly_of_deleted(graph, vertices):
    """
    ``phi(X \\ D, t)`` for a vertex set ``D``.
    Sets of one or two vertices are read off the adjugate of ``tI - A``.

    :raises specwalk.UnknownVertexError: a vertex of ``D`` is not in the graph.
    """

    vertices = list(vertices)
    for v in vertices:
        graph.validate_vertex(v)

    return _deleted_char_poly(graph, tuple(sorted(set(int(v) for v in vertices))))

def matrix_polynomial(coeffs, matrix):
    """
    ``sum(c_k * matrix**k)`` for ascending coefficients ``coeffs``, evaluated
    with Python integers/fractions (``dtype=object``) so nothing overflows.
    """

    matrix = np.asarray(matrix, dtype=object)
    size = matrix.shape[0]
    identity = np.identity(size, dtype=int).astype(object)
    result = np.zeros((size, size), dtype=int).astype(object)

    for c in reversed(list(coeffs)):
        result = result.dot(matrix) + identity * c

    return result


@lru_cache(maxsize=1024)
def minimal_polynomial(graph):
    """
    Minimal polynomial of the adjacency matrix and its discriminant.
    For symmetric ``A`` this is the square-free part of ``phi``.

    :return: ``(psi, disc)``
    :raises specwalk.InvariantViolation: ``psi(A) != 0``.
    """

    psi = square_free_part(char_poly(graph))
    disc = discriminant(psi)

    if graph.order <= EXACT_SUPPORT_CROSSCHECK_LIMIT:
        residual = matrix_polynomial(psi.coeffs, graph.adjacency_matrix())
        if np.any(residual != 0):
            raise InvariantViolation("minimal polynomial does not annihilate A")
    else:
        logger.debug("skip psi(A) = 0 check: order={:d}".format(graph.order))

    if disc == 0:
        raise InvariantViolation("zero discriminant for a square-free polynomial")

    return (psi, disc)


@lru_cache(maxsize=1024)
def repeated_factor(graph):
    """
    ``phi / psi``, monic; a rational function ``p / phi`` has only simple poles iff
    this divides ``p``.
    """

    psi, _disc = minimal_polynomial(graph)

    return char_poly(graph).exact_quotient(psi)


def closed_walk_counts(graph, a, count):
    """
    ``[(A**k)[a, a] for k in range(count)]`` by exact repeated multiplication.
    """

    graph.validate_vertex(a)

    return list(_closed_walk_counts(graph, int(a), count))


@lru_cache(maxsize=4096)
def _closed_walk_counts(graph, a, count):
    vector = [0] * graph.order
    vector[a] = 1
    counts = []
    for _k in range(count):
        counts.append(vector[a])
        vector = graph.walk_step(vector)

    return tuple(counts)


def walk_generating_function(graph, a):
    """
    Generating function ``W_a(t) = sum((A**k)[a, a] * t**k)`` as the reduced
    rational function ``rev(phi(X \\ a)) / rev(phi(X))``.
    """

    graph.validate_vertex(a)

    n = graph.order
    num = char_poly_of_deleted(graph, [a]).reversed(n - 1)
    den = char_poly(graph).reversed(n)

    return RationalFn(num, den)


def resolvent_minor(graph, vertices, t0):
    """
    Exact ``det(((t0 I - A)^-1)[D, D])`` for a vertex set ``D`` and a rational ``t0``.

    :raises specwalk.ZeroDenominatorError: ``t0`` is an eigenvalue of ``A``.
    """

    t0 = Fraction(t0)
    vertices = sorted(set(vertices))
    for v in vertices:
        graph.validate_vertex(v)

    if char_poly(graph).evaluate(t0) == 0:
        raise ZeroDenominatorError("{} is an eigenvalue of the adjacency matrix".format(t0))

    n = graph.order
    resolvent = BigRationalMatrix(
        [
            [(t0 if u == v else 0) - value for v, value in enumerate(row)]
            for u, row in enumerate(graph.adjacency_rows())
        ],
        n,
    ).inverse()

    return resolvent.submatrix(vertices, vertices).det()
