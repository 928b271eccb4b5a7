"""Python front-end for the morphequiv C++ core."""

import json

from ._core import (
    DimensionMismatch,
    Error,
    NotAFrame,
    ParseError,
    SchemaError,
    apply_param,
    asymp_compare,
    eval_seminorm,
    frame_bounds,
    frame_operator,
    rho,
    run_cli,
    verbs,
)

__all__ = [
    "DimensionMismatch",
    "Error",
    "NotAFrame",
    "ParseError",
    "SchemaError",
    "apply_param",
    "asymp_compare",
    "eval_seminorm",
    "frame_bounds",
    "frame_operator",
    "rho",
    "run",
    "run_cli",
    "verbs",
]


def run(verb, *inputs, seed=0, tol_rank=None, tol_psd=None):
    """Run a CLI verb and return (exit_code, parsed JSON report)."""
    code, report = run_cli(verb, [str(p) for p in inputs], seed, "json", tol_rank, tol_psd)
    return code, json.loads(report)
