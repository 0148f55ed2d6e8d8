# encoding: utf-8

import numpy as np
import pytest

from specwalk._cospectral import sign_pattern
from specwalk._graph import distance_graph
from specwalk._invariants import is_walk_regular
from specwalk._spectral import eigen_decompose
from specwalk._symmetry import cospectral_rotation, sign_symmetry, symmetry_polynomial
from specwalk.error import SameVertexError

from .dataset import C4, CUBE, K2, K13, P3, P4, PETERSEN, antipodal_pairs


class Test_symmetry_polynomial(object):
    def test_normal_p3(self):
        symmetry = symmetry_polynomial(P3, 0, 2)

        assert symmetry.coefficients == (-1, 0, 1)
        assert symmetry.degree == 2
        assert symmetry.evaluate(2) == 3
        assert symmetry.is_permutation()
        assert symmetry.maps(0, 2)
        assert symmetry.is_involution()
        assert symmetry.commutes_with_adjacency()
        assert symmetry.is_symmetric()
        assert symmetry.trace() == 1
        assert np.array_equal(symmetry.to_numpy(), [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        assert symmetry.to_json() == ["-1/1", "0/1", "1/1"]

    @pytest.mark.parametrize(["graph", "a", "b"], [[K2, 0, 1], [P4, 0, 3], [P4, 1, 2], [C4, 0, 2]])
    def test_normal_verified(self, graph, a, b):
        symmetry = symmetry_polynomial(graph, a, b)

        assert symmetry.maps(a, b)
        assert symmetry.maps(b, a)
        assert symmetry.is_involution()
        assert symmetry.commutes_with_adjacency()
        assert symmetry.is_symmetric()

    def test_normal_cube_antipodal(self):
        distance3 = distance_graph(CUBE, 3).adjacency_matrix()

        for a, b in antipodal_pairs(CUBE):
            symmetry = symmetry_polynomial(CUBE, a, b)

            assert symmetry.is_permutation()
            assert np.array_equal(symmetry.to_numpy(), distance3)

    def test_normal_walk_regular_parity(self):
        assert is_walk_regular(CUBE)
        assert CUBE.order % 2 == 0

        for a, b in antipodal_pairs(CUBE):
            assert symmetry_polynomial(CUBE, a, b).trace() == 0

    @pytest.mark.parametrize(
        ["graph", "a", "b"], [[K13, 1, 2], [P3, 0, 1], [PETERSEN, 0, 1], [K13, 0, 3]]
    )
    def test_normal_none(self, graph, a, b):
        assert symmetry_polynomial(graph, a, b) is None

    def test_exception(self):
        with pytest.raises(SameVertexError):
            symmetry_polynomial(P3, 1, 1)


class Test_cospectral_rotation(object):
    def test_normal(self):
        rotation = cospectral_rotation(K13, 1, 2)

        expected = np.identity(4)[:, [0, 2, 1, 3]]
        assert np.allclose(rotation, expected, atol=1e-9)

    @pytest.mark.parametrize(["graph", "a", "b"], [[PETERSEN, 0, 1], [P3, 0, 2], [C4, 1, 3]])
    def test_normal_properties(self, graph, a, b):
        rotation = cospectral_rotation(graph, a, b)
        adjacency = graph.adjacency_matrix(dtype=float)
        n = graph.order

        assert np.allclose(rotation.dot(rotation), np.identity(n), atol=1e-9)
        assert np.allclose(rotation.dot(adjacency), adjacency.dot(rotation), atol=1e-9)
        assert np.allclose(rotation[:, a], np.identity(n)[:, b], atol=1e-9)

    def test_normal_none(self):
        assert cospectral_rotation(P3, 0, 1) is None


class Test_sign_symmetry(object):
    def test_normal(self):
        decomp = eigen_decompose(P3)
        symmetry = sign_symmetry(decomp, sign_pattern(decomp, 0, 2))

        assert np.allclose(symmetry, [[0, 0, 1], [0, 1, 0], [1, 0, 0]], atol=1e-9)

    def test_normal_unsupported(self):
        decomp = eigen_decompose(K13)
        symmetry = sign_symmetry(decomp, [1, None, -1])

        assert np.allclose(symmetry.dot(symmetry), np.identity(4), atol=1e-9)

    def test_exception(self):
        with pytest.raises(ValueError):
            sign_symmetry(eigen_decompose(P3), [1, -1])
