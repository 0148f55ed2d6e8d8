# encoding: utf-8

import math
import numbers

import networkx as nx
import numpy as np

from ._const import MAX_GRAPH_ORDER
from .error import DuplicateEdgeError, LoopError, TooLargeError, UnknownVertexError


def _bits(mask):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


class Graph(object):
    """
    Immutable simple undirected graph on the vertices ``0..order-1``.
    Adjacency is held as one integer bitset per vertex.
    """

    @property
    def order(self):
        return self.__order

    @property
    def rows(self):
        return self.__rows

    @property
    def labels(self):
        return self.__labels

    @property
    def size(self):
        return sum(bin(row).count("1") for row in self.__rows) // 2

    def __init__(self, order, rows, labels=None):
        if order < 0 or order > MAX_GRAPH_ORDER:
            raise TooLargeError(
                "graph order must be within 0..{:d}: order={}".format(MAX_GRAPH_ORDER, order)
            )
        if len(rows) != order:
            raise ValueError("expected {:d} adjacency rows, got {:d}".format(order, len(rows)))

        full = (1 << order) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise UnknownVertexError("row {:d} refers to a vertex out of range".format(u))
            if row >> u & 1:
                raise LoopError("loop at vertex {:d}".format(u))
            for v in _bits(row):
                if not rows[v] >> u & 1:
                    raise ValueError("adjacency is not symmetric: {:d}-{:d}".format(u, v))

        if labels is not None:
            labels = tuple(labels)
            if len(labels) != order:
                raise ValueError("expected {:d} labels, got {:d}".format(order, len(labels)))

        self.__order = order
        self.__rows = tuple(rows)
        self.__labels = labels
        self.__neighbor_lists = tuple(tuple(_bits(row)) for row in self.__rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented

        return self.__order == other.order and self.__rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash((self.__order, self.__rows))

    def __repr__(self):
        return "Graph(order={:d}, size={:d})".format(self.__order, self.size)

    @classmethod
    def from_edges(cls, order, edges, labels=None, allow_duplicates=True):
        rows = [0] * order

        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < order:
                    raise UnknownVertexError("vertex {} not in 0..{:d}".format(w, order - 1))
            if u == v:
                raise LoopError("loop at vertex {:d}".format(u))
            if rows[u] >> v & 1 and not allow_duplicates:
                raise DuplicateEdgeError("duplicate edge {:d}-{:d}".format(u, v))

            rows[u] |= 1 << v
            rows[v] |= 1 << u

        return cls(order, rows, labels=labels)

    @classmethod
    def from_networkx(cls, nx_graph):
        nodes = list(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        labels = None if nodes == list(range(len(nodes))) else [str(node) for node in nodes]

        return cls.from_edges(
            len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()], labels=labels
        )

    @classmethod
    def empty(cls, order):
        return cls(order, [0] * order)

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.__order))
        nx_graph.add_edges_from(self.edges())

        return nx_graph

    def validate_vertex(self, v):
        if (
            not isinstance(v, numbers.Integral)
            or isinstance(v, bool)
            or not 0 <= v < self.__order
        ):
            raise UnknownVertexError(
                "vertex {!r} not in a graph with {:d} vertices".format(v, self.__order)
            )

    def has_edge(self, u, v):
        return bool(self.__rows[u] >> v & 1)

    def neighbors(self, v):
        self.validate_vertex(v)

        return list(self.__neighbor_lists[v])

    def degree(self, v):
        self.validate_vertex(v)

        return bin(self.__rows[v]).count("1")

    def walk_step(self, vector):
        """
        ``A z`` for a vector ``z`` of exact numbers, one entry per vertex.
        """

        return [sum(vector[w] for w in neighbors) for neighbors in self.__neighbor_lists]

    def edges(self):
        return [(u, v) for u in range(self.__order) for v in _bits(self.__rows[u]) if u < v]

    def adjacency_matrix(self, dtype=int):
        matrix = np.zeros((self.__order, self.__order), dtype=dtype)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1

        return matrix

    def adjacency_rows(self):
        return [[(row >> v) & 1 for v in range(self.__order)] for row in self.__rows]

    def is_connected(self):
        if self.__order <= 1:
            return True

        return nx.is_connected(self.to_networkx())


def delete_vertices(graph, vertices):
    """
    Induced subgraph on the complement of ``vertices``.

    :return: ``(subgraph, mapping)`` where ``mapping`` sends each surviving
        vertex to its new, order-preserving index.
    """

    removed = set()
    for v in vertices:
        graph.validate_vertex(v)
        removed.add(v)

    kept = [v for v in range(graph.order) if v not in removed]
    mapping = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        row = 0
        for w in _bits(graph.rows[old]):
            if w in mapping:
                row |= 1 << mapping[w]
        rows.append(row)

    labels = None
    if graph.labels is not None:
        labels = [graph.labels[old] for old in kept]

    return (Graph(len(kept), rows, labels=labels), mapping)


def distances(graph, v):
    """
    BFS distances from ``v``; unreachable vertices get ``math.inf``.
    """

    graph.validate_vertex(v)

    lengths = nx.single_source_shortest_path_length(graph.to_networkx(), v)

    return [lengths.get(w, math.inf) for w in range(graph.order)]


def eccentricity(graph, v):
    return max(d for d in distances(graph, v) if d != math.inf)


def distance_graph(graph, r):
    """
    The distance-``r`` graph: two vertices are adjacent iff they are at distance ``r``.
    """

    if r < 1:
        raise ValueError("distance must be positive: r={}".format(r))

    edges = []
    for u in range(graph.order):
        for w, d in enumerate(distances(graph, u)):
            if u < w and d == r:
                edges.append((u, w))

    return Graph.from_edges(graph.order, edges)


def distance_matrices(graph):
    """
    Distance matrices ``A_0 = I, A_1 = A, ..., A_d`` of a connected graph.
    """

    table = np.array(
        [[-1 if d == math.inf else d for d in distances(graph, u)] for u in range(graph.order)],
        dtype=int,
    )
    diameter = int(table.max()) if graph.order else 0

    return [(table == r).astype(int) for r in range(diameter + 1)]


def disjoint_union(x, y):
    shift = x.order
    rows = list(x.rows) + [row << shift for row in y.rows]

    return Graph(x.order + y.order, rows)


def cartesian_product(g, h):
    """
    Cartesian product; vertex ``(u, v)`` gets the index ``u * h.order + v``.
    """

    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())

    def index(node):
        return node[0] * h.order + node[1]

    return Graph.from_edges(
        g.order * h.order, [(index(p), index(q)) for p, q in product.edges()]
    )


def pendant_pairs(graph):
    """
    Pairs ``(a, b)`` where ``a`` has degree one and ``b`` is its neighbour.
    """

    return [(a, graph.neighbors(a)[0]) for a in range(graph.order) if graph.degree(a) == 1]
