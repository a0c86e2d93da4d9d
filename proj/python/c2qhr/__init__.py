"""Theta functions, C2 admissible characters and minimal QHR characters."""

import json

from ._core import (
    Error,
    character,
    default_samples,
    default_tolerance,
    emit_matrix,
    eta,
    gauss_sum,
    qhr_character,
    suite_names,
    theta,
    vartheta,
    weights,
)
from ._core import run_suite_json as _run_suite_json


def run_suite(name, seed=42, samples=None, tol=None):
    """Run a verification suite and return its report as a dict."""
    if samples is None:
        samples = default_samples(name)
    if tol is None:
        tol = default_tolerance(name)
    return json.loads(_run_suite_json(name, seed, samples, tol))


__all__ = [
    "Error",
    "character",
    "emit_matrix",
    "eta",
    "gauss_sum",
    "qhr_character",
    "run_suite",
    "suite_names",
    "theta",
    "vartheta",
    "weights",
]
