# encoding: utf-8

from ._clrm import bright, cyan, green, red, yellow


class ResultLogger(object):
    @property
    def verbosity_level(self):
        return self.__verbosity_level

    def __init__(self, logger, result_counter, verbosity_level):
        self.__logger = logger
        self.__result_counter = result_counter
        self.__verbosity_level = verbosity_level

    def logging_success(self, source, message):
        self.__result_counter.inc_success()
        self.__logger.info("{source:s}: {message}".format(source=cyan(source), message=message))

    def logging_fail(self, source, error):
        self.__result_counter.inc_fail()
        self.__logger.error("{source:s}: {message}".format(source=source, message=error))

    def logging_skip(self, source, reason):
        self.__result_counter.inc_skip()
        self.__logger.debug("skip '{source:s}': {reason}".format(source=source, reason=reason))

    def logging_violation(self, source, error):
        self.__result_counter.inc_violation()
        self.__logger.error("{source:s}: {message}".format(source=source, message=red(error)))

    def write_completion_message(self, command):
        counter = self.__result_counter

        log_list = []
        if counter.success_count > 0:
            log_list.append(green("success={}".format(bright(counter.success_count))))
        if counter.fail_count > 0:
            log_list.append(red("fail={}".format(bright(counter.fail_count))))
        if counter.skip_count > 0:
            log_list.append(yellow("skip={}".format(bright(counter.skip_count))))
        if counter.violation_count > 0:
            log_list.append(red("violation={}".format(bright(counter.violation_count))))

        self.__logger.info("{} results: {}".format(command, ", ".join(log_list) or "none"))
