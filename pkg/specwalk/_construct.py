# encoding: utf-8

import networkx as nx

from ._exact import char_poly, char_poly_of_deleted
from ._graph import Graph, disjoint_union
from ._logger import logger
from ._poly import zero_multiplicity
from .error import InvalidLengthError


def _add_vertices_and_edges(graph, count, edges):
    order = graph.order + count
    rows = list(graph.rows) + [0] * count
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    return Graph(order, rows)


def join_by_path(x, u, y, v, path_len):
    """
    Join ``u`` in ``x`` to ``v`` in ``y`` by a path with ``path_len`` edges.
    Vertices of ``x`` keep their indices, vertices of ``y`` are shifted by
    ``x.order`` and the internal path vertices are appended last.

    :return: ``(Z, u', v')``
    :raises specwalk.InvalidLengthError: ``path_len < 1``.
    :raises specwalk.UnknownVertexError: ``u`` or ``v`` is not a vertex.
    """

    x.validate_vertex(u)
    y.validate_vertex(v)
    if path_len < 1:
        raise InvalidLengthError("path length must be at least 1: path_len={}".format(path_len))

    union = disjoint_union(x, y)
    start = u
    end = x.order + v
    path = [start] + [union.order + k for k in range(path_len - 1)] + [end]

    joined = _add_vertices_and_edges(union, path_len - 1, zip(path, path[1:]))
    logger.debug(
        "join by path: {:d}+{:d} vertices, path_len={:d}".format(x.order, y.order, path_len)
    )

    return (joined, start, end)


def rabbit_ear(x, a):
    """
    Attach two new pendant vertices ``b`` and ``c`` to ``a``.
    ``condition_holds`` is ``mult(0, phi(X \\ a)) <= mult(0, phi(X))``;
    when it holds the two pendants are strongly cospectral in the result.

    :return: ``(Z, b, c, condition_holds)``
    :raises specwalk.UnknownVertexError: ``a`` is not a vertex.
    """

    x.validate_vertex(a)

    b = x.order
    c = x.order + 1
    eared = _add_vertices_and_edges(x, 2, [(a, b), (a, c)])
    condition_holds = zero_multiplicity(char_poly_of_deleted(x, [a])) <= zero_multiplicity(
        char_poly(x)
    )

    return (eared, b, c, condition_holds)


def rooted_isomorphic(x, u, y, v):
    """
    Whether some isomorphism from ``x`` to ``y`` maps ``u`` to ``v``;
    when it does the vertices joined by :py:func:`join_by_path` are strongly cospectral.
    """

    x.validate_vertex(u)
    y.validate_vertex(v)

    nx_x = x.to_networkx()
    nx_y = y.to_networkx()
    nx.set_node_attributes(nx_x, {w: w == u for w in nx_x}, "root")
    nx.set_node_attributes(nx_y, {w: w == v for w in nx_y}, "root")

    return nx.is_isomorphic(nx_x, nx_y, node_match=lambda p, q: p["root"] == q["root"])
