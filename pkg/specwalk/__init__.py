# encoding: utf-8

from .__version__ import __author__, __copyright__, __license__, __version__
from ._construct import join_by_path, rabbit_ear
from ._cospectral import PairVerdict, are_cospectral, are_parallel, are_strongly_cospectral
from ._exact import char_poly, char_poly_of_deleted, minimal_polynomial
from ._graph import Graph
from ._graph_io import load_graph, serialize_graph
from ._invariants import cospectral_classes, sc_classes
from ._logger import set_log_level, set_logger
from ._quantum_walk import (
    closeness_report,
    cospectrality_certificate,
    scan_max_transfer,
    strong_cospectrality_certificate,
    transfer_amplitude,
)
from ._spectral import average_mixing_matrix, eigen_decompose, spectral_density
from ._symmetry import symmetry_polynomial
from .error import (
    AlgebraError,
    GraphError,
    InvariantViolation,
    NumericError,
    ParseError,
    SpecwalkError,
)
