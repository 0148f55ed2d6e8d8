# encoding: utf-8

import random
from fractions import Fraction

import networkx as nx
import numpy as np

from ._construct import join_by_path, rabbit_ear
from ._cospectral import are_strongly_cospectral, projection_deviation
from ._exact import char_poly, minimal_polynomial, resolvent_minor
from ._graph import Graph, delete_vertices
from ._graph_io import serialize_graph
from ._invariants import sc_classes
from ._logger import logger
from ._spectral import (
    average_mixing_matrix,
    average_states_equal,
    eigen_decompose,
    mixing_rows_equal,
)
from ._symmetry import symmetry_polynomial
from ._walk_matrix import support_polynomial, walk_matrix
from .error import SpecwalkError


ATLAS_MAX_ORDER = 7
RANDOM_ORDER_RANGE = (8, 16)
MIXING_MAX_ORDER = 10
RABBIT_EAR_MAX_ORDER = 6
ALL_STRONG_MAX_ORDER = 6
JOIN_BY_PATH_INSTANCES = 50
JOIN_BY_PATH_MAX_ORDER = 14


class SuiteResult(object):
    @property
    def name(self):
        return self.__name

    @property
    def passed(self):
        return self.__passed

    @property
    def failed(self):
        return len(self.__failures)

    @property
    def failures(self):
        return self.__failures

    def __init__(self, name):
        self.__name = name
        self.__passed = 0
        self.__failures = []

    def __repr__(self):
        return "SuiteResult(name={}, passed={:d}, failed={:d})".format(
            self.__name, self.__passed, self.failed
        )

    def check(self, condition, description):
        if condition:
            self.__passed += 1
            return

        logger.warning("[{}] failed: {}".format(self.__name, description))
        self.__failures.append(description)

    def to_dict(self):
        return {"name": self.__name, "passed": self.__passed, "failed": self.failed}


def connected_atlas_graphs(max_order):
    """
    Every connected graph with at most ``min(max_order, 7)`` vertices, up to isomorphism.
    """

    for nx_graph in nx.graph_atlas_g():
        order = nx_graph.number_of_nodes()
        if order == 0 or order > min(max_order, ATLAS_MAX_ORDER):
            continue
        if nx.is_connected(nx_graph):
            yield Graph.from_networkx(nx_graph)


def random_graphs(count, rng, order_range=RANDOM_ORDER_RANGE):
    for _i in range(count):
        order = rng.randint(*order_range)
        nx_graph = nx.gnp_random_graph(order, rng.uniform(0.2, 0.6), seed=rng.randrange(2 ** 32))
        yield Graph.from_networkx(nx_graph)


def _describe(graph, *args):
    return " ".join([serialize_graph(graph)] + [str(arg) for arg in args])


def _check_pairs(graph, decomp, routes, agreement, symmetry_suite, tol=1e-8):
    mixing = average_mixing_matrix(decomp)

    for a in range(graph.order):
        for b in range(a + 1, graph.order):
            verdict = are_strongly_cospectral(graph, a, b, decomp=decomp, with_symmetry=False)
            symmetry = symmetry_polynomial(graph, a, b)
            votes = [
                verdict.strongly_cospectral_exact,
                projection_deviation(decomp, a, b) < tol,
                mixing_rows_equal(mixing, a, b, tol=tol),
                average_states_equal(decomp, a, b, tol=tol),
                symmetry is not None,
            ]
            routes.check(len(set(votes)) == 1, _describe(graph, a, b, votes))
            agreement.check(verdict.numeric_agrees(), _describe(graph, a, b, verdict))

            if symmetry is not None:
                symmetry_suite.check(
                    symmetry.maps(a, b)
                    and symmetry.is_involution()
                    and symmetry.commutes_with_adjacency()
                    and symmetry.is_symmetric(),
                    _describe(graph, a, b, symmetry),
                )


def _check_support_rank(graph, suite):
    for v in range(graph.order):
        try:
            support = support_polynomial(graph, v)
        except SpecwalkError as e:
            suite.check(False, _describe(graph, v, e))
            continue

        suite.check(
            support.degree == walk_matrix(graph, v).certified_rank(support), _describe(graph, v)
        )


def _check_mixing(graph, decomp, suite):
    _psi, disc = minimal_polynomial(graph)
    mixing = average_mixing_matrix(decomp, disc=disc)
    suite.check(
        mixing.integrality_defect() < 1e-6
        and np.allclose(mixing.matrix.sum(axis=1), 1.0, rtol=0, atol=1e-9),
        _describe(graph, "disc={}".format(disc)),
    )


def _check_rabbit_ear(graph, suite):
    for a in range(graph.order):
        eared, b, c, condition_holds = rabbit_ear(graph, a)
        if not condition_holds:
            continue

        verdict = are_strongly_cospectral(eared, b, c, with_symmetry=False)
        suite.check(verdict.strongly_cospectral_exact, _describe(graph, a))


def _check_all_strong(graph, suite):
    classes = sc_classes(graph)
    all_strong = len(classes) == 1
    suite.check(all_strong == (graph.order <= 2), _describe(graph, classes.to_list()))


def _check_join_by_path(rng, count, suite):
    done = 0
    while done < count:
        order = rng.randint(1, 5)
        nx_graph = nx.gnp_random_graph(order, 0.5, seed=rng.randrange(2 ** 32))
        if not nx.is_connected(nx_graph):
            continue

        x = Graph.from_networkx(nx_graph)
        image = list(range(order))
        rng.shuffle(image)
        y = Graph.from_edges(order, [(image[u], image[v]) for u, v in x.edges()])
        u = rng.randrange(order)
        path_len = rng.randint(1, 4)
        if 2 * order + path_len - 1 > JOIN_BY_PATH_MAX_ORDER:
            continue

        joined, start, end = join_by_path(x, u, y, image[u], path_len)
        verdict = are_strongly_cospectral(joined, start, end, with_symmetry=False)
        suite.check(verdict.strongly_cospectral_exact, _describe(joined, start, end))
        done += 1


def _check_jacobi(rng, count, suite):
    done = 0
    while done < count:
        order = rng.randint(1, 7)
        graph = Graph.from_networkx(
            nx.gnp_random_graph(order, rng.uniform(0.2, 0.8), seed=rng.randrange(2 ** 32))
        )
        vertices = rng.sample(range(order), rng.randint(1, min(2, order)))
        t0 = rng.randint(-10, 10)
        phi_value = char_poly(graph).evaluate(Fraction(t0))
        if phi_value == 0:
            continue

        subgraph, _mapping = delete_vertices(graph, vertices)
        expected = char_poly(subgraph).evaluate(Fraction(t0)) / phi_value
        suite.check(
            resolvent_minor(graph, vertices, t0) == expected,
            _describe(graph, vertices, "t0={}".format(t0)),
        )
        done += 1


def run_crosscheck(max_n=6, seed=0, random_count=20, jacobi_count=200):
    """
    Run the exact-versus-numeric agreement suites.

    :return: list of :py:class:`SuiteResult`
    """

    rng = random.Random(seed)
    routes = SuiteResult("sc-routes")
    agreement = SuiteResult("exact-numeric")
    symmetry = SuiteResult("symmetry-matrix")
    support = SuiteResult("support-rank")
    mixing = SuiteResult("mixing-integrality")
    rabbit = SuiteResult("rabbit-ear")
    join = SuiteResult("join-by-path")
    jacobi = SuiteResult("jacobi")
    all_strong = SuiteResult("all-strong")

    corpus = list(connected_atlas_graphs(max_n)) + list(random_graphs(random_count, rng))
    logger.debug("crosscheck corpus: {:d} graphs".format(len(corpus)))

    for graph in corpus:
        decomp = eigen_decompose(graph)
        _check_pairs(graph, decomp, routes, agreement, symmetry)
        _check_support_rank(graph, support)
        if graph.order <= MIXING_MAX_ORDER:
            _check_mixing(graph, decomp, mixing)
        if graph.order <= min(max_n, RABBIT_EAR_MAX_ORDER):
            _check_rabbit_ear(graph, rabbit)
        if graph.order <= min(max_n, ALL_STRONG_MAX_ORDER) and graph.is_connected():
            _check_all_strong(graph, all_strong)

    _check_join_by_path(rng, JOIN_BY_PATH_INSTANCES, join)
    _check_jacobi(rng, jacobi_count, jacobi)

    return [routes, agreement, symmetry, support, mixing, rabbit, join, jacobi, all_strong]
