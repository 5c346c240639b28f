"""Python bindings for the quasidim C++ core."""

from ._core import (
    ContractViolation,
    ConvergenceError,
    Error,
    FormatError,
    Grid,
    InvalidArgument,
    beltrami_of_map,
    box_dimension,
    decompose,
    dimension_bounds,
    generate_mu,
    harnack_campaign,
    run,
    solve,
)

__all__ = [
    "ContractViolation",
    "ConvergenceError",
    "Error",
    "FormatError",
    "Grid",
    "InvalidArgument",
    "beltrami_of_map",
    "box_dimension",
    "decompose",
    "dimension_bounds",
    "generate_mu",
    "harnack_campaign",
    "run",
    "solve",
]
