# encoding: utf-8

PROGRAM_NAME = "specwalk"
SCHEMA_NAME = "specwalk/1"
MAX_VERBOSITY_LEVEL = 2

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SHORT_FORM_MAX_ORDER = 62
GRAPH6_MAX_ORDER = 258047
MAX_GRAPH_ORDER = 10000
INFINITE_DISTANCE = -1

DEFAULT_GROUP_TOLERANCE = 1e-7
DEFAULT_VERDICT_TOLERANCE = 1e-8
DEFAULT_SUPPORT_TOLERANCE = 1e-9
DEFAULT_AUTOMORPHISM_LIMIT = 12
DEFAULT_DECOMPOSITION_LIMIT = 2000

# numeric deviations in this range are borderline and re-decided exactly
BORDERLINE_RANGE = (1e-10, 1e-6)

EXACT_SUPPORT_CROSSCHECK_LIMIT = 64
ADJUGATE_MAX_ORDER = 64
MODULAR_RANK_PRIME = 2 ** 61 - 1
EXACT_POWER_SUM_LIMIT = 32
REFINEMENT_ITERATIONS = 60
ORBIT_CLOSENESS_BOUND = 2 ** -0.5
FLOAT_SIGNIFICANT_DIGITS = 17


class ExitCode(object):
    SUCCESS = 0
    PROPERTY_NOT_FOUND = 1
    USAGE_ERROR = 2
    INVARIANT_VIOLATION = 3
