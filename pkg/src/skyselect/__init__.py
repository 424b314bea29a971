"""Most-interesting-tuple selection operators over low-dimensional data.

One shared data model (lower-is-better tuples, weight vectors on the
preference simplex, convex weight regions) and the full operator family on
top of it: skyline and k-skyband, linear top-k, region-based flexible
skylines, output-size-specified selection, uncertain top-k partitions,
epsilon-relaxed skylines, and representative skyline subsets.
"""

from .dataset import (
    DISTRIBUTIONS,
    Dataset,
    IngestionError,
    Tuple,
    generate,
    load_csv,
    normalize,
    write_csv,
)
from .queries import (
    RankedResult,
    check_weights,
    k_skyband,
    pareto_dominates,
    skyline,
    top_k,
    top_k_threshold,
)
from .regions import (
    Ball,
    EmptyRegionError,
    LinearConstraint,
    UnsupportedDimensionError,
    WeightRegion,
    ball_region,
    exists_weak_optimum,
    find_feasible_point,
    full_simplex,
    grid_sample,
    is_empty,
    linear_range,
    maximize_linear,
    minimize_linear,
    parse_region,
    region_interval_d2,
    region_vertices,
)
from .flexible import constraint_from_preference, f_dominates, nd, po
from .oss import (
    OssResult,
    UnreachableSizeError,
    non_rho_dominated,
    ord_query,
    oru_query,
    rho_dominates,
)
from .utk import PartitionCell, UtkResult, order_breakpoints, utk1, utk2
from .epsilon import epsilon_dominates, epsilon_skyline
from .representative import (
    coverage,
    distance_representative,
    dominance_representative,
)

__version__ = "0.1.0"

__all__ = [
    "DISTRIBUTIONS",
    "Dataset",
    "IngestionError",
    "Tuple",
    "generate",
    "load_csv",
    "normalize",
    "write_csv",
    "RankedResult",
    "check_weights",
    "k_skyband",
    "pareto_dominates",
    "skyline",
    "top_k",
    "top_k_threshold",
    "Ball",
    "EmptyRegionError",
    "LinearConstraint",
    "UnsupportedDimensionError",
    "WeightRegion",
    "ball_region",
    "exists_weak_optimum",
    "find_feasible_point",
    "full_simplex",
    "grid_sample",
    "is_empty",
    "linear_range",
    "maximize_linear",
    "minimize_linear",
    "parse_region",
    "region_interval_d2",
    "region_vertices",
    "constraint_from_preference",
    "f_dominates",
    "nd",
    "po",
    "OssResult",
    "UnreachableSizeError",
    "non_rho_dominated",
    "ord_query",
    "oru_query",
    "rho_dominates",
    "PartitionCell",
    "UtkResult",
    "order_breakpoints",
    "utk1",
    "utk2",
    "epsilon_dominates",
    "epsilon_skyline",
    "coverage",
    "distance_representative",
    "dominance_representative",
]
