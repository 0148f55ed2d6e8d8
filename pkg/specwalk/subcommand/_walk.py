# encoding: utf-8

import click

from .._clrm import verdict
from .._cospectral import validate_pair
from .._quantum_walk import (
    closeness_report,
    cospectrality_certificate,
    scan_max_transfer,
    strong_cospectrality_certificate,
    transfer_amplitude,
    walk_trace,
    write_walk_trace_csv,
)
from ._base import GraphCommand


class WalkCommand(GraphCommand):
    COMMAND_NAME = "walk"

    def walk(self, graph_arg, a, b, t_max, steps, csv_path=None, certify=False):
        graph = self._load_graph(graph_arg)
        if graph is None:
            return

        self._run_guarded(
            graph_arg, self.__walk, graph_arg, graph, a, b, t_max, steps, csv_path, certify
        )

    def __walk(self, source, graph, a, b, t_max, steps, csv_path, certify):
        validate_pair(graph, a, b)
        decomp = self._decompose(graph)

        result = scan_max_transfer(decomp, a, b, t_max, steps)
        transfer = transfer_amplitude(decomp, a, b, result.t_star)
        self._report.add_record(
            {
                "a": a,
                "b": b,
                "t_max": t_max,
                "steps": steps,
                "t_star": result.t_star,
                "magnitude": result.magnitude,
                "refined": result.refined,
                "orbit_distance": transfer.orbit_distance,
            }
        )
        click.echo("t*={!r} |U(t*)[a,b]|={!r}".format(result.t_star, result.magnitude))

        if csv_path:
            write_walk_trace_csv(walk_trace(decomp, a, b, t_max, steps), csv_path)
            self._logger.info("walk trace written to '{}'".format(csv_path))

        if certify:
            self.__certify(graph, decomp, a, b, result.t_star)

        self._result_logger.logging_success(
            source,
            "max transfer ({:d} -> {:d}) = {:.12g} at t={:.12g}".format(
                a, b, result.magnitude, result.t_star
            ),
        )

    def __certify(self, graph, decomp, a, b, t):
        for certificate in (
            cospectrality_certificate(graph, decomp, a, b, t),
            strong_cospectrality_certificate(graph, decomp, a, b, t),
        ):
            self._report.add_certificate(certificate.to_dict())
            click.echo(
                "certificate kind={} verdict={} t={!r} observed={!r}".format(
                    certificate.kind.value,
                    str(certificate.verdict).lower(),
                    certificate.time,
                    certificate.observed,
                )
            )
            self._logger.info(
                "{} certificate: {}".format(certificate.kind.value, verdict(certificate.verdict))
            )

        report = closeness_report(
            graph, decomp, a, b, t, automorphism_limit=self._settings.automorphism_limit
        )
        self._report.add_certificate(report.to_dict())
        click.echo(
            "certificate kind=closeness verdict={} t={!r} observed={!r}".format(
                str(report.close).lower(), t, report.distance
            )
        )
