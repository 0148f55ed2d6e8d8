# encoding: utf-8

import pytest

from specwalk._construct import join_by_path, rabbit_ear, rooted_isomorphic
from specwalk._graph import Graph
from specwalk.error import InvalidLengthError, UnknownVertexError

from .dataset import C4, K1, K2, K13, P3, P4


class Test_join_by_path(object):
    def test_normal(self):
        joined, start, end = join_by_path(K1, 0, K1, 0, 3)

        assert joined == Graph.from_edges(4, [(0, 2), (2, 3), (3, 1)])
        assert (start, end) == (0, 1)
        assert joined.degree(start) == joined.degree(end) == 1

    @pytest.mark.parametrize(
        ["x", "u", "y", "v", "path_len", "expected_order", "expected_end"],
        [
            [P3, 0, P3, 2, 1, 6, 5],
            [P3, 1, K2, 0, 2, 6, 3],
            [C4, 0, C4, 0, 4, 11, 4],
        ],
    )
    def test_normal_layout(self, x, u, y, v, path_len, expected_order, expected_end):
        joined, start, end = join_by_path(x, u, y, v, path_len)

        assert joined.order == expected_order
        assert joined.size == x.size + y.size + path_len
        assert start == u
        assert end == expected_end
        assert joined.is_connected()

    def test_exception(self):
        with pytest.raises(InvalidLengthError):
            join_by_path(P3, 0, P3, 0, 0)

        with pytest.raises(UnknownVertexError):
            join_by_path(P3, 3, P3, 0, 1)


class Test_rabbit_ear(object):
    @pytest.mark.parametrize(
        ["graph", "a", "expected"],
        [[P3, 0, True], [K2, 0, False], [K1, 0, True], [K13, 0, False], [K13, 1, True]],
    )
    def test_normal(self, graph, a, expected):
        eared, b, c, condition_holds = rabbit_ear(graph, a)

        assert eared.order == graph.order + 2
        assert (b, c) == (graph.order, graph.order + 1)
        assert eared.neighbors(b) == eared.neighbors(c) == [a]
        assert condition_holds == expected

    def test_exception(self):
        with pytest.raises(UnknownVertexError):
            rabbit_ear(P3, 5)


class Test_rooted_isomorphic(object):
    @pytest.mark.parametrize(
        ["x", "u", "y", "v", "expected"],
        [
            [P3, 0, P3, 2, True],
            [P3, 0, P3, 1, False],
            [P4, 0, P4, 3, True],
            [P4, 1, P4, 3, False],
            [K13, 1, K13, 3, True],
            [P3, 0, K2, 0, False],
        ],
    )
    def test_normal(self, x, u, y, v, expected):
        assert rooted_isomorphic(x, u, y, v) == expected
