# encoding: utf-8

import click

from .._clrm import bright, green, red
from .._crosscheck import run_crosscheck
from ._base import GraphCommand


class CrosscheckCommand(GraphCommand):
    COMMAND_NAME = "crosscheck"

    def crosscheck(self, max_n, seed, random_count, jacobi_count):
        self._report.set_extra(
            "options",
            {"max_n": max_n, "seed": seed, "random": random_count, "jacobi": jacobi_count},
        )

        suites = self._run_guarded(
            "crosscheck", run_crosscheck, max_n, seed, random_count, jacobi_count
        )
        if suites is None:
            return

        for suite in suites:
            self._report.add_record(suite.to_dict())
            click.echo(
                "{:<20s} passed={:d} failed={:d}".format(suite.name, suite.passed, suite.failed)
            )

            if suite.failed:
                self._result_logger.logging_violation(
                    suite.name,
                    "{:d} failures, first: {}".format(suite.failed, suite.failures[0]),
                )
            else:
                self._result_logger.logging_success(
                    suite.name, green("passed={}".format(bright(suite.passed)))
                )

        if any(suite.failed for suite in suites):
            self._logger.error(red("crosscheck found disagreements"))
