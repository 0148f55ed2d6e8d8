# encoding: utf-8

from itertools import combinations

from .._clrm import verdict
from .._cospectral import are_strongly_cospectral
from .._enum import DecisionMode
from .._graph_io import serialize_graph
from .._invariants import sc_classes
from ._base import GraphCommand


class AnalyzeCommand(GraphCommand):
    COMMAND_NAME = "analyze"

    def analyze(self, graph_arg, pairs, mode):
        """
        :param pairs: list of ``(a, b)`` or |None| for every unordered pair.
        :param mode: a :py:class:`specwalk.DecisionMode` value.
        """

        graph = self._load_graph(graph_arg)
        if graph is None:
            return

        self._report.set_extra(
            "graph", {"order": graph.order, "size": graph.size, "graph6": serialize_graph(graph)}
        )
        self._report.set_extra("mode", DecisionMode(mode).value)

        self._run_guarded(graph_arg, self.__analyze, graph_arg, graph, pairs, DecisionMode(mode))

    def __analyze(self, source, graph, pairs, mode):
        decomp = self._decompose(graph)
        all_pairs = pairs is None
        if all_pairs:
            pairs = list(combinations(range(graph.order), 2))

        for a, b in pairs:
            pair_verdict = are_strongly_cospectral(
                graph,
                a,
                b,
                decomp=decomp,
                tol=self._settings.verdict_tolerance,
                with_symmetry=mode != DecisionMode.NUMERIC,
            )
            self._report.add_record(pair_verdict.to_dict(mode.value))
            self._logger.debug(repr(pair_verdict))

            if self._verbosity_level > 0 or not all_pairs:
                self._logger.info(
                    "({:d}, {:d}): cospectral={}, parallel={}, strongly_cospectral={}".format(
                        a,
                        b,
                        verdict(pair_verdict.cospectral_exact),
                        verdict(pair_verdict.parallel_exact),
                        verdict(pair_verdict.strongly_cospectral_exact),
                    )
                )

        message = "{:d} pairs analyzed".format(len(pairs))
        if all_pairs:
            classes = sc_classes(graph, decomp=decomp)
            self._report.set_extra("sc_classes", classes.to_list())
            message += ", sc_classes={}".format(classes.to_list())

        self._result_logger.logging_success(source, message)
