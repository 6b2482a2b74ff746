"""Edge-colourings of complete graphs avoiding even-chromatic and
non-unique-chromatic clique copies, their linear graph codes, and the
recursive amalgamation constructions that keep palettes quasipolynomial.
"""

from .amalgam import (
    AmalgamColouring,
    AmalgamMeta,
    amalgamate,
    component,
    predicted_colour_count,
    product,
    weaken,
)
from .build import (
    BuildSchedule,
    GrowthRow,
    build_k4_unique,
    build_k5_unique,
    build_k8_odd,
    growth_report,
    schedule,
)
from .codes import (
    CodeReport,
    CodeScanReport,
    ParityCheckMatrix,
    code_report,
    image_parity,
    parity_matrix,
    verify_code_avoids,
)
from .core import (
    CliqueCopy,
    Colouring,
    GraphSpec,
    canonicalize,
    colour_count,
    edge_index,
    n_edges,
    rainbow,
    restrict,
    trivial,
)
from .errors import CapacityError, ContractViolation, FormatError
from .io import dumps_amalgam, dumps_egc, load_egc, parse_amalgam, parse_egc, parse_graph, save_egc
from .kernels import BACKEND, HAS_NUMBA
from .structure import (
    DecompositionChain,
    find_independent_set_b2,
    is_even_decomposable,
    unique_lower_bound_exponent,
)
from .verify import (
    RectangleWitness,
    ScanReport,
    diagnose_rectangle,
    is_even_chromatic,
    is_unique_chromatic,
    min_copy_colours,
    scan,
)

__version__ = "0.1.0"

__all__ = [
    "AmalgamColouring",
    "AmalgamMeta",
    "BACKEND",
    "BuildSchedule",
    "CapacityError",
    "CliqueCopy",
    "CodeReport",
    "CodeScanReport",
    "Colouring",
    "ContractViolation",
    "DecompositionChain",
    "FormatError",
    "GraphSpec",
    "GrowthRow",
    "HAS_NUMBA",
    "ParityCheckMatrix",
    "RectangleWitness",
    "ScanReport",
    "amalgamate",
    "build_k4_unique",
    "build_k5_unique",
    "build_k8_odd",
    "canonicalize",
    "code_report",
    "colour_count",
    "component",
    "diagnose_rectangle",
    "dumps_amalgam",
    "dumps_egc",
    "edge_index",
    "find_independent_set_b2",
    "growth_report",
    "image_parity",
    "is_even_chromatic",
    "is_even_decomposable",
    "is_unique_chromatic",
    "load_egc",
    "min_copy_colours",
    "n_edges",
    "parity_matrix",
    "parse_amalgam",
    "parse_egc",
    "parse_graph",
    "predicted_colour_count",
    "product",
    "rainbow",
    "restrict",
    "save_egc",
    "scan",
    "schedule",
    "trivial",
    "unique_lower_bound_exponent",
    "verify_code_avoids",
    "weaken",
]
