# encoding: utf-8

import random

import pytest

from specwalk._crosscheck import SuiteResult, connected_atlas_graphs, random_graphs, run_crosscheck


class Test_SuiteResult(object):
    def test_normal(self):
        suite = SuiteResult("jacobi")
        suite.check(True, "ok")
        suite.check(False, "Bg 0 2")

        assert suite.passed == 1
        assert suite.failed == 1
        assert suite.failures == ["Bg 0 2"]
        assert suite.to_dict() == {"name": "jacobi", "passed": 1, "failed": 1}


class Test_connected_atlas_graphs(object):
    @pytest.mark.parametrize(["max_order", "expected"], [[1, 1], [2, 2], [3, 4], [4, 10]])
    def test_normal(self, max_order, expected):
        graphs = list(connected_atlas_graphs(max_order))

        assert len(graphs) == expected
        assert all(graph.is_connected() for graph in graphs)


class Test_random_graphs(object):
    def test_normal(self):
        first = list(random_graphs(3, random.Random(7)))
        second = list(random_graphs(3, random.Random(7)))

        assert first == second
        assert all(8 <= graph.order <= 16 for graph in first)


class Test_run_crosscheck(object):
    def test_normal(self):
        suites = run_crosscheck(max_n=4, seed=0, random_count=2, jacobi_count=20)

        assert [suite.name for suite in suites] == [
            "sc-routes",
            "exact-numeric",
            "symmetry-matrix",
            "support-rank",
            "mixing-integrality",
            "rabbit-ear",
            "join-by-path",
            "jacobi",
            "all-strong",
        ]
        for suite in suites:
            assert suite.failed == 0, suite.failures

        by_name = {suite.name: suite for suite in suites}
        assert by_name["join-by-path"].passed == 50
        assert by_name["jacobi"].passed == 20
        assert by_name["all-strong"].passed == 10

    @pytest.mark.slow
    def test_normal_acceptance_scale(self):
        suites = run_crosscheck(max_n=7, seed=0, random_count=500, jacobi_count=200)

        for suite in suites:
            assert suite.failed == 0, (suite.name, suite.failures[:5])

        by_name = {suite.name: suite for suite in suites}
        # connected graphs on at most 6 vertices
        assert by_name["all-strong"].passed == 143
        assert by_name["rabbit-ear"].passed > 0
        assert by_name["jacobi"].passed == 200
        assert by_name["join-by-path"].passed == 50
        # 853 connected graphs on 7 vertices
        assert by_name["support-rank"].passed > 853 * 7
