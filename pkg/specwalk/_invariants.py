# encoding: utf-8

import numpy as np

from ._const import DEFAULT_SUPPORT_TOLERANCE
from ._cospectral import are_parallel, validate_pair
from ._exact import char_poly_of_deleted
from ._graph import distances, eccentricity
from ._logger import logger
from ._matrix import BigRationalMatrix
from ._partition import Partition
from ._spectral import eigen_decompose
from ._walk_matrix import support_polynomial, walk_matrix
from .error import DisconnectedGraphError, InvariantViolation


def cospectral_classes(graph):
    """
    Partition of the vertices by their vertex-deleted characteristic polynomial.
    """

    first_vertex = {}
    cell_of = []
    for v in range(graph.order):
        key = char_poly_of_deleted(graph, [v])
        cell_of.append(first_vertex.setdefault(key, v))

    return Partition.from_cell_of(cell_of)


def _is_sc_pair(graph, a, b, decomp):
    return (
        char_poly_of_deleted(graph, [a]) == char_poly_of_deleted(graph, [b])
        and are_parallel(graph, a, b, decomp=decomp).exact
    )


def sc_classes(graph, decomp=None):
    """
    Classes of pairwise strongly cospectral vertices.
    Pairs are decided exactly and merged with union-find; transitivity and the
    bound ``|class| <= support size`` are verified afterwards.

    :raises specwalk.InvariantViolation: a merged class is not pairwise strongly
        cospectral or exceeds the support size of its members.
    """

    if graph.order == 0:
        return Partition([], order=0)
    if decomp is None:
        decomp = eigen_decompose(graph)

    parent = list(range(graph.order))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    verdicts = {}
    for cell in cospectral_classes(graph).cells:
        for i, a in enumerate(cell):
            for b in cell[i + 1 :]:
                verdicts[(a, b)] = _is_sc_pair(graph, a, b, decomp)
                if verdicts[(a, b)]:
                    root_a, root_b = find(a), find(b)
                    if root_a != root_b:
                        parent[max(root_a, root_b)] = min(root_a, root_b)

    classes = Partition.from_cell_of([find(v) for v in range(graph.order)])

    for cell in classes.cells:
        if len(cell) == 1:
            continue

        if not all(verdicts[(a, b)] for i, a in enumerate(cell) for b in cell[i + 1 :]):
            raise InvariantViolation("strong cospectrality is not transitive on {}".format(cell))

        support_size = support_polynomial(graph, cell[0]).degree
        if len(cell) > support_size:
            raise InvariantViolation(
                "class {} is larger than the support size {:d}".format(cell, support_size)
            )

    logger.debug("sc_classes: {}".format(classes.to_list()))

    return classes


def is_walk_regular(graph, decomp=None, tol=1e-8):
    """
    Exact test that ``diag(A^k)`` is constant for ``k < n``, cross-checked against
    constant idempotent diagonals.
    """

    n = graph.order
    if n <= 1:
        return True

    adjacency = graph.adjacency_matrix().astype(object)
    power = np.identity(n, dtype=int).astype(object)
    exact = True
    for _k in range(n):
        diagonal = [power[v, v] for v in range(n)]
        if len(set(diagonal)) > 1:
            exact = False
            break
        power = power.dot(adjacency)

    if decomp is None:
        decomp = eigen_decompose(graph)

    numeric = all(np.ptp(np.diag(E)) < tol for E in decomp.idempotents)
    if numeric != exact:
        logger.warning(
            "walk-regularity: numeric verdict {} disagrees with exact verdict {}".format(
                numeric, exact
            )
        )

    return exact


class AlgebraProfile(object):
    """
    Dimension of the algebra generated by ``A`` and ``e_a e_a^T``:
    ``s**2`` plus the number of nonzero ``E'_r = E_r - F_r``.
    """

    @property
    def vertex(self):
        return self.__vertex

    @property
    def support_size(self):
        return self.__support_size

    @property
    def residual_flags(self):
        return self.__residual_flags

    @property
    def dimension(self):
        return self.__support_size ** 2 + sum(self.__residual_flags)

    def __init__(self, vertex, support_size, residual_flags):
        self.__vertex = vertex
        self.__support_size = support_size
        self.__residual_flags = tuple(residual_flags)

    def __repr__(self):
        return "AlgebraProfile(vertex={:d}, s={:d}, dimension={:d})".format(
            self.__vertex, self.__support_size, self.dimension
        )

    def to_dict(self):
        return {
            "vertex": self.__vertex,
            "support_size": self.__support_size,
            "residual_flags": list(self.__residual_flags),
            "dimension": self.dimension,
        }


def algebra_dimension(graph, a, decomp=None, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
    """
    :raises specwalk.UnknownVertexError:
    """

    graph.validate_vertex(a)
    if decomp is None:
        decomp = eigen_decompose(graph)

    flags = []
    numeric_support = 0
    for E in decomp.idempotents:
        weight = E[a, a]
        if weight > support_tolerance:
            numeric_support += 1
            residual = E - np.outer(E[:, a], E[:, a]) / weight
        else:
            residual = E
        flags.append(bool(np.linalg.norm(residual) > 0.5))

    support_size = support_polynomial(graph, a).degree
    if support_size != numeric_support:
        logger.warning(
            "algebra_dimension: numeric support {:d} != exact support {:d}".format(
                numeric_support, support_size
            )
        )

    return AlgebraProfile(a, support_size, flags)


class ExtremalReport(object):
    @property
    def vertex(self):
        return self.__vertex

    @property
    def eccentricity(self):
        return self.__eccentricity

    @property
    def support_size(self):
        return self.__support_size

    @property
    def extremal(self):
        return self.__support_size == self.__eccentricity + 1

    @property
    def forced_partner(self):
        return self.__forced_partner

    def __init__(self, vertex, eccentricity, support_size, forced_partner):
        self.__vertex = vertex
        self.__eccentricity = eccentricity
        self.__support_size = support_size
        self.__forced_partner = forced_partner

    def __repr__(self):
        return "ExtremalReport(d={:d}, s={:d}, extremal={}, partner={})".format(
            self.__eccentricity, self.__support_size, self.extremal, self.__forced_partner
        )

    def to_dict(self):
        return {
            "vertex": self.__vertex,
            "eccentricity": self.__eccentricity,
            "support_size": self.__support_size,
            "extremal": self.extremal,
            "forced_partner": self.__forced_partner,
        }


def spectrally_extremal(graph, a, decomp=None):
    """
    Compare the support size ``s`` of ``a`` with its eccentricity ``d``.
    A spectrally extremal vertex (``s == d + 1``) with a strongly cospectral partner
    has that partner as the unique vertex at distance ``d``.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.DisconnectedGraphError: the graph is not connected.
    :raises specwalk.InvariantViolation: the partner is not the unique farthest vertex.
    """

    graph.validate_vertex(a)
    if not graph.is_connected():
        raise DisconnectedGraphError("eccentricity requires a connected graph")

    d = eccentricity(graph, a)
    support_size = support_polynomial(graph, a).degree
    partner = None

    if support_size == d + 1 and graph.order > 1:
        if decomp is None:
            decomp = eigen_decompose(graph)

        partners = [b for b in range(graph.order) if b != a and _is_sc_pair(graph, a, b, decomp)]
        if partners:
            farthest = [v for v, dist in enumerate(distances(graph, a)) if dist == d]
            if partners != farthest or len(farthest) != 1:
                raise InvariantViolation(
                    "extremal vertex {:d}: partners {} but farthest vertices {}".format(
                        a, partners, farthest
                    )
                )
            partner = partners[0]

    return ExtremalReport(a, d, support_size, partner)


def walk_modules_equal(graph, a, b):
    """
    Exact test that ``a`` and ``b`` generate the same walk module:
    ``rank([M_a | M_b]) == rank(M_a) == rank(M_b)``.
    """

    validate_pair(graph, a, b)

    m_a = walk_matrix(graph, a)
    m_b = walk_matrix(graph, b)
    joined = BigRationalMatrix.from_columns(m_a.columns + m_b.columns, graph.order)

    return m_a.rank == m_b.rank == joined.rank()
