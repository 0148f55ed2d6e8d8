# encoding: utf-8

import msgfy
import path

from .._common import ResultLogger
from .._counter import ResultCounter
from .._enum import GraphFormat
from .._graph_io import load_graph_argument
from .._report import ReportDocument, digest_text
from .._spectral import eigen_decompose
from ..error import GraphError, InvariantViolation, SpecwalkError


class GraphCommand(object):
    COMMAND_NAME = None

    @property
    def report(self):
        return self._report

    def __init__(self, logger, settings, verbosity_level, format_name=None, encoding=None):
        self._logger = logger
        self._settings = settings
        self._verbosity_level = verbosity_level
        self._format_name = format_name or GraphFormat.AUTO.value
        self._encoding = encoding or "utf-8"

        self._result_counter = ResultCounter()
        self._result_logger = ResultLogger(logger, self._result_counter, verbosity_level)
        self._report = ReportDocument(self.COMMAND_NAME)

    def get_return_code(self):
        return self._result_counter.get_return_code()

    def get_success_count(self):
        return self._result_counter.success_count

    def write_completion_message(self):
        self._result_logger.write_completion_message(self.COMMAND_NAME)

    def write_report(self, json_path):
        json_path = path.Path(json_path)
        dir_path = json_path.dirname()
        if dir_path:
            dir_path.makedirs_p()

        self._report.write(json_path)
        self._logger.debug("report written to '{}'".format(json_path))

    def _load_graph(self, value):
        """
        :return: the graph or |None| when ``value`` cannot be loaded (logged as a failure).
        """

        try:
            graph, text = load_graph_argument(value, self._format_name, self._encoding)
        except (GraphError, IOError) as e:
            self._result_logger.logging_fail(value, msgfy.to_error_message(e))
            return None

        self._report.set_input_digest(digest_text(text))
        self._logger.debug("loaded '{}': {}".format(value, graph))

        return graph

    def _decompose(self, graph):
        return eigen_decompose(
            graph,
            group_tol=self._settings.group_tolerance,
            limit=self._settings.decomposition_limit,
        )

    def _run_guarded(self, source, func, *args):
        """
        Call ``func`` and log library errors against ``source``.

        :return: the result of ``func`` or |None| on error.
        """

        try:
            return func(*args)
        except InvariantViolation as e:
            self._result_logger.logging_violation(source, msgfy.to_error_message(e))
        except (SpecwalkError, ValueError) as e:
            self._result_logger.logging_fail(source, msgfy.to_error_message(e))

        return None
