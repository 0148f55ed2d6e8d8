# encoding: utf-8

import io

import click
import path

from .._clrm import verdict
from .._construct import join_by_path, rabbit_ear, rooted_isomorphic
from .._cospectral import are_strongly_cospectral
from .._graph_io import serialize_graph
from ..error import InvariantViolation
from ._base import GraphCommand


class ConstructCommand(GraphCommand):
    COMMAND_NAME = "construct"

    def __init__(self, logger, settings, verbosity_level, out_path=None):
        super(ConstructCommand, self).__init__(logger, settings, verbosity_level)

        self.__out_path = out_path

    def join_path(self, x_arg, u, y_arg, v, path_len):
        x = self._load_graph(x_arg)
        y = self._load_graph(y_arg)
        if x is None or y is None:
            return

        self._run_guarded(x_arg, self.__join_path, x, u, y, v, path_len)

    def rabbit_ear(self, x_arg, a):
        x = self._load_graph(x_arg)
        if x is None:
            return

        self._run_guarded(x_arg, self.__rabbit_ear, x, a)

    def __join_path(self, x, u, y, v, path_len):
        guaranteed = rooted_isomorphic(x, u, y, v)
        joined, start, end = join_by_path(x, u, y, v, path_len)

        self.__emit(
            "join-path",
            joined,
            start,
            end,
            guaranteed,
            {"path_len": path_len, "rooted_isomorphic": guaranteed},
        )

    def __rabbit_ear(self, x, a):
        eared, b, c, condition_holds = rabbit_ear(x, a)

        self.__emit(
            "rabbit-ear", eared, b, c, condition_holds, {"condition_holds": condition_holds}
        )

    def __emit(self, construction, graph, a, b, guaranteed, details):
        pair_verdict = are_strongly_cospectral(
            graph, a, b, tol=self._settings.verdict_tolerance, with_symmetry=False
        )
        sc = pair_verdict.strongly_cospectral_exact
        if guaranteed and not sc:
            raise InvariantViolation(
                "{}: the constructed pair ({:d}, {:d}) is not strongly cospectral".format(
                    construction, a, b
                )
            )

        graph6 = serialize_graph(graph)
        record = {
            "construction": construction,
            "graph6": graph6,
            "order": graph.order,
            "a": a,
            "b": b,
            "guaranteed": guaranteed,
            "cospectral": pair_verdict.cospectral_exact,
            "strongly_cospectral": sc,
        }
        record.update(details)
        self._report.add_record(record)

        if self.__out_path:
            out_path = path.Path(self.__out_path)
            with io.open(out_path, "w", encoding="utf-8") as f:
                f.write(graph6 + "\n")
            self._logger.info("graph6 written to '{}'".format(out_path))
        else:
            click.echo(graph6)

        click.echo("pair {:d} {:d}: strongly_cospectral={}".format(a, b, str(sc).lower()))
        self._result_logger.logging_success(
            construction,
            "order={:d}, pair=({:d}, {:d}), strongly_cospectral={}".format(
                graph.order, a, b, verdict(sc)
            ),
        )
