# encoding: utf-8

import logbook


logger = logbook.Logger("specwalk")
logger.disable()


def set_logger(is_enable):
    if is_enable:
        logger.enable()
    else:
        logger.disable()


def set_log_level(log_level):
    """
    Set the logging level of the library channel.
    ``logbook.NOTSET`` disables the channel.
    """

    if log_level == logbook.NOTSET:
        set_logger(is_enable=False)
        return

    set_logger(is_enable=True)
    logger.level = log_level
