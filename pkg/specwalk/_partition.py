# encoding: utf-8

from collections import defaultdict

import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from ._const import DEFAULT_AUTOMORPHISM_LIMIT
from ._graph import distances
from ._logger import logger
from .error import DimensionMismatchError, TooLargeError


class Partition(object):
    """
    Partition of the vertex set ``0..order-1`` into nonempty disjoint cells.
    """

    @property
    def cells(self):
        return self.__cells

    @property
    def cell_of(self):
        return self.__cell_of

    @property
    def order(self):
        return len(self.__cell_of)

    def __init__(self, cells, order=None):
        cells = [tuple(sorted(cell)) for cell in cells]
        if order is None:
            order = sum(len(cell) for cell in cells)

        cell_of = [None] * order
        for index, cell in enumerate(cells):
            if not cell:
                raise ValueError("empty cell at {:d}".format(index))
            for v in cell:
                if not 0 <= v < order:
                    raise ValueError("vertex {} out of range 0..{:d}".format(v, order - 1))
                if cell_of[v] is not None:
                    raise ValueError("vertex {:d} lies in two cells".format(v))
                cell_of[v] = index

        missing = [v for v, index in enumerate(cell_of) if index is None]
        if missing:
            raise ValueError("vertices not covered by any cell: {}".format(missing))

        self.__cells = tuple(cells)
        self.__cell_of = tuple(cell_of)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented

        return self.to_list() == other.to_list()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash(tuple(tuple(cell) for cell in self.to_list()))

    def __len__(self):
        return len(self.__cells)

    def __repr__(self):
        return "Partition({})".format(self.to_list())

    @classmethod
    def unit(cls, order):
        return cls([range(order)] if order else [], order=order)

    @classmethod
    def discrete(cls, order):
        return cls([[v] for v in range(order)], order=order)

    @classmethod
    def from_cell_of(cls, cell_of):
        groups = defaultdict(list)
        for v, key in enumerate(cell_of):
            groups[key].append(v)

        return cls([groups[key] for key in sorted(groups)], order=len(cell_of))

    @classmethod
    def with_singleton(cls, order, v):
        rest = [w for w in range(order) if w != v]

        return cls([[v], rest] if rest else [[v]], order=order)

    def cell(self, v):
        return self.__cells[self.__cell_of[v]]

    def is_singleton(self, v):
        return len(self.cell(v)) == 1

    def refines(self, other):
        """
        Return |True| if every cell of this partition lies inside a cell of ``other``.
        """

        return all(len({other.cell_of[v] for v in cell}) == 1 for cell in self.__cells)

    def to_list(self):
        return sorted(list(cell) for cell in self.__cells)

    def characteristic_matrix(self, normalized=False):
        matrix = np.zeros((self.order, len(self.__cells)))
        for index, cell in enumerate(self.__cells):
            weight = 1.0 / np.sqrt(len(cell)) if normalized else 1.0
            matrix[list(cell), index] = weight

        return matrix

    def projection(self):
        """
        Orthogonal projection onto the functions constant on each cell.
        """

        normalized = self.characteristic_matrix(normalized=True)

        return normalized.dot(normalized.T)


def _validate_order(graph, partition):
    if partition.order != graph.order:
        raise DimensionMismatchError(
            "partition of {:d} vertices for a graph of order {:d}".format(
                partition.order, graph.order
            )
        )


def _to_partition(graph, seeds):
    if seeds is None:
        return Partition.unit(graph.order)
    if isinstance(seeds, Partition):
        _validate_order(graph, seeds)
        return seeds

    return Partition(seeds, order=graph.order)


def is_equitable(graph, partition):
    _validate_order(graph, partition)

    for cell in partition.cells:
        profiles = set()
        for v in cell:
            counts = [0] * len(partition)
            for w in graph.neighbors(v):
                counts[partition.cell_of[w]] += 1
            profiles.add(tuple(counts))
        if len(profiles) > 1:
            return False

    return True


def coarsest_equitable_partition(graph, seeds=None):
    """
    Coarsest equitable refinement of ``seeds`` (unit partition when omitted),
    by repeated splitting on neighbour counts until a fixed point.
    """

    partition = _to_partition(graph, seeds)
    cell_of = list(partition.cell_of)
    num_cells = len(partition)

    while True:
        signatures = []
        for v in range(graph.order):
            counts = defaultdict(int)
            for w in graph.neighbors(v):
                counts[cell_of[w]] += 1
            signatures.append((cell_of[v], tuple(sorted(counts.items()))))

        relabel = {key: index for index, key in enumerate(sorted(set(signatures)))}
        cell_of = [relabel[key] for key in signatures]

        if len(relabel) == num_cells:
            break
        num_cells = len(relabel)

    refined = Partition.from_cell_of(cell_of)
    logger.debug("equitable refinement: {:d} -> {:d} cells".format(len(partition), len(refined)))

    return refined


def distance_partition(graph, v):
    """
    Cells of vertices at equal distance from ``v``, nearest first;
    unreachable vertices share the last cell.
    """

    return Partition.from_cell_of(distances(graph, v))


class Permutation(object):
    @property
    def image(self):
        return self.__image

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError("not a permutation: {}".format(image))

        self.__image = image

    def __call__(self, v):
        return self.__image[v]

    def __len__(self):
        return len(self.__image)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented

        return self.__image == other.image

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash(self.__image)

    def __repr__(self):
        return "Permutation({})".format(list(self.__image))

    def __mul__(self, other):
        # (self * other)(v) == self(other(v))
        return Permutation(self.__image[v] for v in other.image)

    @classmethod
    def identity(cls, order):
        return cls(range(order))

    def inverse(self):
        inverse = [0] * len(self.__image)
        for v, w in enumerate(self.__image):
            inverse[w] = v

        return Permutation(inverse)

    def is_identity(self):
        return all(v == w for v, w in enumerate(self.__image))

    def fixes(self, v):
        return self.__image[v] == v

    def is_automorphism(self, graph):
        for u in range(graph.order):
            for v in range(u + 1, graph.order):
                if graph.has_edge(u, v) != graph.has_edge(self(u), self(v)):
                    return False

        return True

    def matrix(self):
        """
        Permutation matrix ``P`` with ``P e_v = e_{image[v]}``.
        """

        size = len(self.__image)
        matrix = np.zeros((size, size), dtype=int)
        matrix[list(self.__image), list(range(size))] = 1

        return matrix


def automorphisms(graph, limit=DEFAULT_AUTOMORPHISM_LIMIT):
    """
    Full automorphism group by backtracking search, identity first.
    Candidate images are restricted to the cells of the coarsest equitable partition.

    :raises specwalk.TooLargeError: ``graph.order`` exceeds ``limit``.
    """

    if graph.order > limit:
        raise TooLargeError(
            "automorphism search is limited to {:d} vertices: order={:d}".format(
                limit, graph.order
            )
        )

    colors = coarsest_equitable_partition(graph).cell_of
    nx_graph = graph.to_networkx()
    for v in range(graph.order):
        nx_graph.nodes[v]["cell"] = colors[v]

    matcher = GraphMatcher(nx_graph, nx_graph, node_match=lambda x, y: x["cell"] == y["cell"])
    group = {
        Permutation(mapping[v] for v in range(graph.order))
        for mapping in matcher.isomorphisms_iter()
    }
    identity = Permutation.identity(graph.order)

    return [identity] + sorted((p for p in group if p != identity), key=lambda p: p.image)


def orbit_partition(graph, limit=DEFAULT_AUTOMORPHISM_LIMIT):
    cell_of = list(range(graph.order))

    def find(v):
        while cell_of[v] != v:
            cell_of[v] = cell_of[cell_of[v]]
            v = cell_of[v]
        return v

    for permutation in automorphisms(graph, limit=limit):
        for v in range(graph.order):
            root_v, root_w = find(v), find(permutation(v))
            if root_v != root_w:
                cell_of[max(root_v, root_w)] = min(root_v, root_w)

    return Partition.from_cell_of([find(v) for v in range(graph.order)])
