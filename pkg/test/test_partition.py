# encoding: utf-8

import numpy as np
import pytest
from sympy.utilities.iterables import multiset_partitions

from specwalk._graph import Graph
from specwalk._partition import (
    Partition,
    Permutation,
    automorphisms,
    coarsest_equitable_partition,
    distance_partition,
    is_equitable,
    orbit_partition,
)
from specwalk.error import DimensionMismatchError, TooLargeError

from .dataset import C4, CUBE, K13, P3, P4, PETERSEN, SMALL_CONNECTED


class Test_Partition(object):
    def test_normal(self):
        partition = Partition([[2, 0], [1]])

        assert partition.order == 3
        assert partition.cells == ((0, 2), (1,))
        assert partition.cell_of == (0, 1, 0)
        assert partition.cell(2) == (0, 2)
        assert partition.is_singleton(1)
        assert not partition.is_singleton(0)
        assert partition.to_list() == [[0, 2], [1]]
        assert Partition.discrete(3).refines(partition)
        assert not Partition.unit(3).refines(partition)

    def test_normal_matrices(self):
        partition = Partition([[0, 2], [1]])
        characteristic = partition.characteristic_matrix()
        projection = partition.projection()

        assert np.array_equal(characteristic, [[1, 0], [0, 1], [1, 0]])
        assert np.allclose(projection, [[0.5, 0, 0.5], [0, 1, 0], [0.5, 0, 0.5]])
        assert np.allclose(projection.dot(projection), projection)

    @pytest.mark.parametrize(
        ["cells", "order"], [[[[0], [0, 1]], 2], [[[0]], 2], [[[0, 3]], 2], [[[]], 0]]
    )
    def test_exception(self, cells, order):
        with pytest.raises(ValueError):
            Partition(cells, order=order)


class Test_is_equitable(object):
    @pytest.mark.parametrize(
        ["graph", "cells", "expected"],
        [
            [P3, [[0, 2], [1]], True],
            [P3, [[0, 1, 2]], False],
            [P4, [[0, 3], [1, 2]], True],
            [P4, [[0, 1], [2, 3]], False],
            [PETERSEN, [list(range(10))], True],
        ],
    )
    def test_normal(self, graph, cells, expected):
        partition = Partition(cells)

        assert is_equitable(graph, partition) == expected

        projection = partition.projection()
        adjacency = graph.adjacency_matrix()
        assert np.allclose(projection.dot(adjacency), adjacency.dot(projection)) == expected


class Test_coarsest_equitable_partition(object):
    @pytest.mark.parametrize(
        ["graph", "seeds", "expected"],
        [
            [P3, None, [[0, 2], [1]]],
            [P4, None, [[0, 3], [1, 2]]],
            [K13, None, [[0], [1, 2, 3]]],
            [P3, Partition.with_singleton(3, 0), [[0], [1], [2]]],
            [C4, Partition.with_singleton(4, 0), [[0], [1, 3], [2]]],
            [PETERSEN, None, [list(range(10))]],
        ],
    )
    def test_normal(self, graph, seeds, expected):
        refined = coarsest_equitable_partition(graph, seeds)

        assert refined.to_list() == expected
        assert is_equitable(graph, refined)

    @pytest.mark.parametrize(["graph"], [[graph] for graph in SMALL_CONNECTED])
    def test_normal_brute_force(self, graph):
        for seeds in (Partition.unit(graph.order), Partition.with_singleton(graph.order, 0)):
            refined = coarsest_equitable_partition(graph, seeds)
            candidates = [
                partition
                for partition in (
                    Partition(cells, order=graph.order)
                    for cells in multiset_partitions(list(range(graph.order)))
                )
                if partition.refines(seeds) and is_equitable(graph, partition)
            ]

            assert refined in candidates
            assert all(partition.refines(refined) for partition in candidates)
            assert len(refined) == min(len(partition) for partition in candidates)

    def test_exception(self):
        with pytest.raises(DimensionMismatchError):
            coarsest_equitable_partition(P4, Partition.unit(3))
        with pytest.raises(DimensionMismatchError):
            is_equitable(P3, Partition.discrete(4))


class Test_distance_partition(object):
    def test_normal(self):
        assert distance_partition(P4, 1).to_list() == [[0, 2], [1], [3]]
        assert distance_partition(C4, 0).cells == ((0,), (1, 3), (2,))

    def test_normal_disconnected(self):
        assert distance_partition(Graph.empty(3), 0).cells == ((0,), (1, 2))


class Test_Permutation(object):
    def test_normal(self):
        p = Permutation([1, 2, 0])
        q = Permutation([1, 0, 2])

        assert p(0) == 1
        assert (p * q).image == (2, 1, 0)
        assert (p * p.inverse()).is_identity()
        assert not p.fixes(0)
        assert q.fixes(2)
        assert np.array_equal(p.matrix().dot([1, 0, 0]), [0, 1, 0])

    def test_normal_is_automorphism(self):
        assert Permutation([2, 1, 0]).is_automorphism(P3)
        assert not Permutation([1, 0, 2]).is_automorphism(P3)

    def test_exception(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])


class Test_automorphisms(object):
    @pytest.mark.parametrize(
        ["graph", "expected"], [[P3, 2], [P4, 2], [C4, 8], [K13, 6], [CUBE, 48], [PETERSEN, 120]]
    )
    def test_normal(self, graph, expected):
        group = automorphisms(graph)

        assert len(group) == expected
        assert group[0].is_identity()
        assert all(p.is_automorphism(graph) for p in group)

    def test_exception(self):
        with pytest.raises(TooLargeError):
            automorphisms(PETERSEN, limit=9)

    @pytest.mark.parametrize(["graph"], [[P4], [C4], [K13], [CUBE], [PETERSEN]])
    def test_normal_group(self, graph):
        group = set(automorphisms(graph))

        assert all(p.inverse() in group for p in group)
        assert all(p * q in group for p in group for q in group)


class Test_orbit_partition(object):
    @pytest.mark.parametrize(
        ["graph", "expected"],
        [[P3, [[0, 2], [1]]], [K13, [[0], [1, 2, 3]]], [PETERSEN, [list(range(10))]]],
    )
    def test_normal(self, graph, expected):
        assert orbit_partition(graph).to_list() == expected

    @pytest.mark.parametrize(["graph"], [[graph] for graph in SMALL_CONNECTED])
    def test_normal_equitable(self, graph):
        orbits = orbit_partition(graph)

        assert is_equitable(graph, orbits)
        assert orbits.refines(coarsest_equitable_partition(graph))
