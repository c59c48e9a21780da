"""Exact Mellin/inverse-Mellin operator calculus for holonomic equations.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    DiffOp,
    RecOp,
    Series,
    expand,
    from_json,
    hyper_solutions,
    mellin_quadrature,
    ode_to_coeff_rec,
    ode_to_mellin_rec,
    parse,
    rational_ode_solutions,
    rec_to_ode,
    rec_to_ode_trace,
    regularized_mellin_quadrature,
    verify_ode_solution,
    verify_rec_certificate,
    __version__,
)

__all__ = [
    "DiffOp",
    "RecOp",
    "Series",
    "expand",
    "from_json",
    "hyper_solutions",
    "mellin_quadrature",
    "ode_to_coeff_rec",
    "ode_to_mellin_rec",
    "parse",
    "rational_ode_solutions",
    "rec_to_ode",
    "rec_to_ode_trace",
    "regularized_mellin_quadrature",
    "verify_ode_solution",
    "verify_rec_certificate",
    "__version__",
]
