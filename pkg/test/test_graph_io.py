# encoding: utf-8

import random

import pytest

from specwalk._enum import GraphFormat
from specwalk._graph import Graph
from specwalk._graph_io import (
    iter_graph6_lines,
    load_graph,
    load_graph_argument,
    load_graph_file,
    serialize_graph,
)
from specwalk.error import DuplicateEdgeError, LoopError, ParseError

from .dataset import (
    K2,
    K2_GRAPH6,
    P3,
    P3_EDGELIST,
    P3_GRAPH6,
    PETERSEN,
    PETERSEN_GRAPH6,
    write_text,
)


class Test_load_graph(object):
    @pytest.mark.parametrize(
        ["text", "format_name", "expected"],
        [
            [K2_GRAPH6, GraphFormat.GRAPH6, K2],
            [P3_GRAPH6, "graph6", P3],
            [PETERSEN_GRAPH6, "auto", PETERSEN],
            ["?", "graph6", Graph.empty(0)],
            [P3_EDGELIST, GraphFormat.EDGELIST, P3],
            [P3_EDGELIST, GraphFormat.AUTO, P3],
            ["2 0\n", "edgelist", Graph.empty(2)],
        ],
    )
    def test_normal(self, text, format_name, expected):
        assert load_graph(text, format_name) == expected

    @pytest.mark.parametrize(
        ["text", "format_name", "offset", "line"],
        [
            ["A_!", "graph6", 2, None],
            ["B", "graph6", 1, None],
            ["A`", "graph6", 1, None],
            ["", "graph6", 0, None],
            [">>graph6<<A_", "graph6", 0, None],
            ["3\n0 1\n", "edgelist", None, 1],
            ["3 2\n0 1\n", "edgelist", None, 2],
            ["3 1\n0 5\n", "edgelist", None, 2],
            ["3 1\n0 x\n", "edgelist", None, 2],
        ],
    )
    def test_exception_parse(self, text, format_name, offset, line):
        with pytest.raises(ParseError) as e:
            load_graph(text, format_name)

        assert e.value.offset == offset
        assert e.value.line == line

    @pytest.mark.parametrize(
        ["text", "expected"],
        [["2 1\n1 1\n", LoopError], ["2 2\n0 1\n1 0\n", DuplicateEdgeError]],
    )
    def test_exception_edgelist(self, text, expected):
        with pytest.raises(expected):
            load_graph(text, GraphFormat.EDGELIST)

    def test_exception_unknown_format(self):
        with pytest.raises(ValueError):
            load_graph(K2_GRAPH6, "sparse6")


class Test_serialize_graph(object):
    @pytest.mark.parametrize(
        ["graph", "format_name", "expected"],
        [
            [K2, GraphFormat.GRAPH6, K2_GRAPH6],
            [P3, GraphFormat.GRAPH6, P3_GRAPH6],
            [PETERSEN, GraphFormat.GRAPH6, PETERSEN_GRAPH6],
            [Graph.empty(0), GraphFormat.GRAPH6, "?"],
            [P3, GraphFormat.EDGELIST, P3_EDGELIST.strip()],
        ],
    )
    def test_normal(self, graph, format_name, expected):
        assert serialize_graph(graph, format_name) == expected

    def test_normal_long_order(self):
        graph = Graph.from_edges(70, [(0, 69)])
        text = serialize_graph(graph)

        assert text[0] == "~"
        assert load_graph(text, GraphFormat.GRAPH6) == graph

    @pytest.mark.parametrize(["seed"], [[seed] for seed in range(40)])
    def test_normal_round_trip(self, seed):
        rng = random.Random(seed)
        order = rng.randint(1, 40)
        density = rng.random()
        graph = Graph.from_edges(
            order,
            [(u, v) for u in range(order) for v in range(u + 1, order) if rng.random() < density],
        )

        for format_name in (GraphFormat.GRAPH6, GraphFormat.EDGELIST):
            assert load_graph(serialize_graph(graph, format_name), format_name) == graph
        assert load_graph(serialize_graph(graph)) == graph


class Test_load_graph_file(object):
    def test_normal(self, tmpdir):
        file_path = write_text(str(tmpdir.join("p3.edgelist")), P3_EDGELIST)

        assert load_graph_file(file_path) == P3

    def test_normal_iter_graph6_lines(self, tmpdir):
        file_path = write_text(
            str(tmpdir.join("corpus.g6")), "{}\n\n{}\n".format(K2_GRAPH6, P3_GRAPH6)
        )

        assert list(iter_graph6_lines(file_path)) == [(1, K2_GRAPH6), (3, P3_GRAPH6)]


class Test_load_graph_argument(object):
    def test_normal_inline(self):
        assert load_graph_argument(P3_GRAPH6) == (P3, P3_GRAPH6)

    def test_normal_file(self, tmpdir):
        file_path = write_text(str(tmpdir.join("k2.g6")), K2_GRAPH6 + "\n")

        graph, text = load_graph_argument(file_path)

        assert graph == K2
        assert text == K2_GRAPH6 + "\n"

    def test_exception_missing_file(self, tmpdir):
        with pytest.raises(IOError):
            load_graph_argument(str(tmpdir.join("missing.g6")))
