# encoding: utf-8

from enum import Enum, unique


@unique
class Context(Enum):
    LOG_LEVEL = 30
    VERBOSITY_LEVEL = 50
    GROUP_TOLERANCE = 60
    VERDICT_TOLERANCE = 70
    AUTOMORPHISM_LIMIT = 80
    DECOMPOSITION_LIMIT = 90


@unique
class GraphFormat(Enum):
    AUTO = "auto"
    GRAPH6 = "graph6"
    EDGELIST = "edgelist"


@unique
class DecisionMode(Enum):
    EXACT = "exact"
    NUMERIC = "numeric"
    BOTH = "both"


@unique
class SearchTarget(Enum):
    SC_PAIRS = "sc-pairs"
    COSPECTRAL_PAIRS = "cospectral-pairs"


@unique
class CertificateKind(Enum):
    COSPECTRAL = "cospectral"
    STRONGLY_COSPECTRAL = "strongly_cospectral"
    CLOSENESS = "closeness"
