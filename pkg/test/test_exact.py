# encoding: utf-8

import itertools
from fractions import Fraction

import numpy as np
import pytest

from specwalk._exact import (
    adjugate_coefficients,
    char_poly,
    char_poly_of_deleted,
    closed_walk_counts,
    matrix_polynomial,
    minimal_polynomial,
    repeated_factor,
    resolvent_minor,
    walk_generating_function,
)
from specwalk._graph import Graph, delete_vertices
from specwalk._poly import IntPoly
from specwalk.error import UnknownVertexError, ZeroDenominatorError

from .dataset import C4, CUBE, K1, K2, K4, K13, P3, P3_K2, PETERSEN


class Test_char_poly(object):
    @pytest.mark.parametrize(
        ["graph", "expected"],
        [
            [Graph.empty(0), (1,)],
            [K1, (0, 1)],
            [K2, (-1, 0, 1)],
            [P3, (0, -2, 0, 1)],
            [K4, (-3, -8, -6, 0, 1)],
            [C4, (0, 0, -4, 0, 1)],
        ],
    )
    def test_normal(self, graph, expected):
        assert char_poly(graph).coeffs == expected

    def test_normal_petersen(self):
        # (t - 3)(t - 1)^5 (t + 2)^4
        expected = IntPoly([-3, 1])
        for _i in range(5):
            expected = expected * IntPoly([-1, 1])
        for _i in range(4):
            expected = expected * IntPoly([2, 1])

        assert char_poly(PETERSEN) == expected


class Test_char_poly_of_deleted(object):
    @pytest.mark.parametrize(
        ["graph", "vertices", "expected"],
        [
            [P3, [0], (-1, 0, 1)],
            [P3, [1], (0, 0, 1)],
            [P3, [0, 2], (0, 1)],
            [K2, [0, 1], (1,)],
        ],
    )
    def test_normal(self, graph, vertices, expected):
        assert char_poly_of_deleted(graph, vertices).coeffs == expected

    @pytest.mark.parametrize(["graph"], [[P3_K2], [CUBE], [PETERSEN]])
    def test_normal_subgraph(self, graph):
        for size in (1, 2, 3):
            for vertices in itertools.combinations(range(graph.order), size):
                subgraph, _mapping = delete_vertices(graph, vertices)

                assert char_poly_of_deleted(graph, vertices) == char_poly(subgraph)

    def test_normal_unordered(self):
        assert char_poly_of_deleted(P3, [2, 0]) == char_poly_of_deleted(P3, [0, 2, 0])
        assert char_poly_of_deleted(P3, []) == char_poly(P3)

    def test_exception(self):
        with pytest.raises(UnknownVertexError):
            char_poly_of_deleted(P3, [3])

        with pytest.raises(UnknownVertexError):
            char_poly_of_deleted(P3, [0, -1])


class Test_adjugate_coefficients(object):
    def test_normal(self):
        # tI - A for P3 has adjugate [[t^2 - 1, t, 1], [t, t^2, t], [1, t, t^2 - 1]]
        blocks = adjugate_coefficients(P3)

        assert len(blocks) == 3
        assert np.array_equal(blocks[2].astype(int), np.identity(3, dtype=int))
        assert [block[0, 0] for block in blocks] == [-1, 0, 1]
        assert [block[0, 1] for block in blocks] == [0, 1, 0]
        assert [block[0, 2] for block in blocks] == [1, 0, 0]
        assert [block[1, 1] for block in blocks] == [0, 0, 1]

    def test_normal_empty(self):
        assert adjugate_coefficients(Graph.empty(0)) == ()


class Test_repeated_factor(object):
    @pytest.mark.parametrize(
        ["graph", "expected"],
        [[K1, (1,)], [K2, (1,)], [K13, (0, 1)], [C4, (0, 1)], [K4, (1, 2, 1)]],
    )
    def test_normal(self, graph, expected):
        assert repeated_factor(graph).coeffs == expected

    @pytest.mark.parametrize(["graph"], [[P3_K2], [CUBE], [PETERSEN]])
    def test_normal_product(self, graph):
        psi, _disc = minimal_polynomial(graph)
        factor = repeated_factor(graph)

        assert factor.leading_coefficient == 1
        assert factor * psi == char_poly(graph)


class Test_minimal_polynomial(object):
    @pytest.mark.parametrize(
        ["graph", "expected_psi", "expected_disc"],
        [
            [K2, (-1, 0, 1), 4],
            [P3, (0, -2, 0, 1), 32],
            [K4, (-3, -2, 1), 16],
            [K13, (0, -3, 0, 1), 108],
        ],
    )
    def test_normal(self, graph, expected_psi, expected_disc):
        psi, disc = minimal_polynomial(graph)

        assert psi.coeffs == expected_psi
        assert disc == expected_disc


class Test_matrix_polynomial(object):
    def test_normal(self):
        adjacency = K2.adjacency_matrix()

        assert np.all(matrix_polynomial([-1, 0, 1], adjacency) == 0)
        assert np.all(matrix_polynomial([0, 1], adjacency) == adjacency)
        assert np.all(matrix_polynomial([Fraction(1, 2)], adjacency) == np.identity(2) / 2)


class Test_walk_generating_function(object):
    @pytest.mark.parametrize(["graph", "a"], [[P3, 0], [P3, 1], [K13, 2], [C4, 0], [PETERSEN, 5]])
    def test_normal(self, graph, a):
        fn = walk_generating_function(graph, a)

        assert fn.series(8) == closed_walk_counts(graph, a, 8)
        assert fn.has_simple_poles()

    def test_normal_p3(self):
        assert walk_generating_function(P3, 0).series(5) == [1, 0, 1, 0, 2]
        assert closed_walk_counts(P3, 1, 5) == [1, 0, 2, 0, 4]


class Test_resolvent_minor(object):
    @pytest.mark.parametrize(
        ["graph", "vertices", "t0", "expected"],
        [
            [K2, [0], 2, Fraction(2, 3)],
            [K2, [0, 1], 2, Fraction(1, 3)],
            [P3, [1], 1, -1],
            [P3, [0, 2], Fraction(1, 2), Fraction(-4, 7)],
        ],
    )
    def test_normal(self, graph, vertices, t0, expected):
        assert resolvent_minor(graph, vertices, t0) == expected
        assert expected == (
            char_poly_of_deleted(graph, vertices).evaluate(Fraction(t0))
            / char_poly(graph).evaluate(Fraction(t0))
        )

    @pytest.mark.parametrize(["graph", "t0"], [[K2, 1], [K2, -1], [P3, 0]])
    def test_exception(self, graph, t0):
        with pytest.raises(ZeroDenominatorError):
            resolvent_minor(graph, [0], t0)
