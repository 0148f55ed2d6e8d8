# encoding: utf-8

import multiprocessing

import click
import msgfy
import path
import simplejson as json

from .._const import ExitCode
from .._enum import GraphFormat, SearchTarget
from .._graph_io import iter_graph6_lines, load_graph
from .._invariants import cospectral_classes, sc_classes
from .._report import digest_text
from .._spectral import eigen_decompose
from ..error import InvariantViolation, SpecwalkError
from ._base import GraphCommand


def _class_pairs(classes):
    return [[a, b] for cell in classes.cells for i, a in enumerate(cell) for b in cell[i + 1 :]]


def scan_graph6(task):
    """
    Worker of the scan pool; takes ``(line_number, graph6_text, target_value, settings)``
    and returns a plain dict so that results pickle cheaply.
    """

    lineno, text, target, settings = task
    result = {"line": lineno, "graph6": text}

    try:
        graph = load_graph(text, GraphFormat.GRAPH6)
        if SearchTarget(target) == SearchTarget.SC_PAIRS:
            decomp = None
            if graph.order > 0:
                decomp = eigen_decompose(
                    graph,
                    group_tol=settings.group_tolerance,
                    limit=settings.decomposition_limit,
                )
            classes = sc_classes(graph, decomp=decomp)
        else:
            classes = cospectral_classes(graph)
    except InvariantViolation as e:
        result["violation"] = msgfy.to_error_message(e)
        return result
    except (SpecwalkError, ValueError) as e:
        result["error"] = msgfy.to_error_message(e)
        return result

    result["order"] = graph.order
    result["classes"] = classes.to_list()
    result["pairs"] = _class_pairs(classes)

    return result


class ScanCommand(GraphCommand):
    COMMAND_NAME = "scan"

    @property
    def found_count(self):
        return self.__found_count

    def __init__(self, logger, settings, verbosity_level, jobs=1, expect_some=False):
        super(ScanCommand, self).__init__(logger, settings, verbosity_level)

        self.__jobs = max(1, jobs)
        self.__expect_some = expect_some
        self.__found_count = 0

    def get_return_code(self):
        return_code = super(ScanCommand, self).get_return_code()
        if return_code != ExitCode.SUCCESS:
            return return_code

        if self.__expect_some and self.__found_count == 0:
            return ExitCode.PROPERTY_NOT_FOUND

        return return_code

    def scan(self, file_path, target):
        file_path = path.Path(file_path)
        target = SearchTarget(target)

        try:
            self._report.set_input_digest(digest_text(file_path.bytes()))
            tasks = [
                (lineno, text, target.value, self._settings)
                for lineno, text in iter_graph6_lines(file_path, self._encoding)
            ]
        except (IOError, UnicodeDecodeError) as e:
            self._result_logger.logging_fail(file_path, msgfy.to_error_message(e))
            return

        self._report.set_extra("target", target.value)
        self._logger.debug(
            "scanning {:d} graphs from '{}' with {:d} jobs".format(
                len(tasks), file_path, self.__jobs
            )
        )

        for result in self.__map(tasks):
            self.__collect(file_path, result)

        self._report.set_extra("pair_count", self.__found_count)

    def __map(self, tasks):
        if self.__jobs == 1 or len(tasks) <= 1:
            return [scan_graph6(task) for task in tasks]

        pool = multiprocessing.Pool(self.__jobs)
        try:
            return list(pool.imap(scan_graph6, tasks))
        finally:
            pool.close()
            pool.join()

    def __collect(self, file_path, result):
        source = "{}:{:d}".format(file_path, result["line"])
        self._report.add_record(result)

        if "violation" in result:
            self._result_logger.logging_violation(source, result["violation"])
            return
        if "error" in result:
            self._result_logger.logging_fail(source, result["error"])
            return

        self._result_counter.inc_success()
        self.__found_count += len(result["pairs"])
        click.echo(
            "{} {:d} pairs {}".format(
                result["graph6"],
                len(result["pairs"]),
                json.dumps(result["classes"], separators=(",", ":")),
            )
        )
