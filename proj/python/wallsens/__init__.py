"""Transient multilayer wall conduction with derivative-based sensitivity analysis."""

from ._core import (
    DivergenceError,
    FieldStore,
    Grid,
    MarchResult,
    OracleFailure,
    Problem,
    TaylorModel,
    TrackOutputs,
    __version__,
    absorbed_fraction,
    annual_wall_problem,
    build_taylor_loads,
    evaluation_count,
    local_metric,
    propagate,
    rbd_fast,
    sobol_indices,
    solve,
    validation_case,
)

__all__ = [
    "DivergenceError",
    "FieldStore",
    "Grid",
    "MarchResult",
    "OracleFailure",
    "Problem",
    "TaylorModel",
    "TrackOutputs",
    "__version__",
    "absorbed_fraction",
    "annual_wall_problem",
    "build_taylor_loads",
    "evaluation_count",
    "local_metric",
    "propagate",
    "rbd_fast",
    "sobol_indices",
    "solve",
    "validation_case",
]
