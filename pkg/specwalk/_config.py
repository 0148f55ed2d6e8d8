# encoding: utf-8

from collections import namedtuple

import msgfy
from appconfigpy import ConfigItem, ConfigManager
from typepy import Integer, RealNumber

from ._const import (
    DEFAULT_AUTOMORPHISM_LIMIT,
    DEFAULT_DECOMPOSITION_LIMIT,
    DEFAULT_GROUP_TOLERANCE,
    DEFAULT_VERDICT_TOLERANCE,
    PROGRAM_NAME,
)


class ConfigKey(object):
    GROUP_TOLERANCE = "group_tolerance"
    VERDICT_TOLERANCE = "verdict_tolerance"
    AUTOMORPHISM_LIMIT = "automorphism_limit"
    DECOMPOSITION_LIMIT = "decomposition_limit"


Settings = namedtuple(
    "Settings", "group_tolerance verdict_tolerance automorphism_limit decomposition_limit"
)

_SETTING_TYPES = (
    (ConfigKey.GROUP_TOLERANCE, RealNumber, float, DEFAULT_GROUP_TOLERANCE),
    (ConfigKey.VERDICT_TOLERANCE, RealNumber, float, DEFAULT_VERDICT_TOLERANCE),
    (ConfigKey.AUTOMORPHISM_LIMIT, Integer, int, DEFAULT_AUTOMORPHISM_LIMIT),
    (ConfigKey.DECOMPOSITION_LIMIT, Integer, int, DEFAULT_DECOMPOSITION_LIMIT),
)


app_config_mgr = ConfigManager(
    PROGRAM_NAME,
    [
        ConfigItem(
            name=ConfigKey.GROUP_TOLERANCE,
            prompt_text="Relative tolerance to merge numeric eigenvalues",
            initial_value=str(DEFAULT_GROUP_TOLERANCE),
        ),
        ConfigItem(
            name=ConfigKey.VERDICT_TOLERANCE,
            prompt_text="Absolute tolerance on idempotent entries for numeric verdicts",
            initial_value=str(DEFAULT_VERDICT_TOLERANCE),
        ),
        ConfigItem(
            name=ConfigKey.AUTOMORPHISM_LIMIT,
            prompt_text="Largest graph order for automorphism enumeration",
            initial_value=str(DEFAULT_AUTOMORPHISM_LIMIT),
        ),
        ConfigItem(
            name=ConfigKey.DECOMPOSITION_LIMIT,
            prompt_text="Largest graph order for dense spectral decompositions",
            initial_value=str(DEFAULT_DECOMPOSITION_LIMIT),
        ),
    ],
)


def load_app_configs(logger):
    try:
        return app_config_mgr.load()
    except ValueError as e:
        logger.debug(msgfy.to_debug_message(e))
        return {}


def resolve_settings(logger, app_configs, overrides):
    """
    Command-line overrides take precedence over the application configuration,
    which takes precedence over the built-in defaults.
    """

    values = {}
    for key, type_class, to_builtin, default in _SETTING_TYPES:
        value = overrides.get(key)
        if value is None:
            value = app_configs.get(key)

        converted = None
        if value is not None:
            converted = type_class(value, strict_level=0).try_convert()
            if converted is None:
                logger.warn("invalid {}: {}, use the default {}".format(key, value, default))

        values[key] = default if converted is None else to_builtin(converted)
        logger.debug("{}: {}".format(key, values[key]))

    return Settings(**values)
