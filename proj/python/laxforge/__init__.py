"""Exact U_q[osp(m|n)] Lax operators, R-matrices and verification suites.

Every function returns JSON text in the same format as the CLI files;
the helpers below decode it.
"""

import json

from ._core import (
    InvalidInput,
    LaxforgeError,
    PoleError,
    RelationViolation,
    SamplingError,
    SchemaError,
    UnsupportedRank,
    fingerprint,
    run_cli,
    suite_names,
)
from . import _core


def algebra(m, n):
    return json.loads(_core.algebra(m, n))


def vector_rep(m, n):
    return json.loads(_core.vector_rep(m, n))


def sigma(m, n):
    return json.loads(_core.sigma(m, n))


def r_matrix(m, n):
    return json.loads(_core.r_matrix(m, n))


def evaluate_r(m, n, s):
    return json.loads(_core.evaluate_r(m, n, str(s)))


def spectral(m, n, kind="untwisted"):
    return json.loads(_core.spectral(m, n, kind))


def verify(m, n, suites=("all",), samples=20, seed=1):
    return json.loads(_core.verify(m, n, list(suites), samples, seed))


__all__ = [
    "InvalidInput", "LaxforgeError", "PoleError", "RelationViolation", "SamplingError", "SchemaError",
    "UnsupportedRank", "algebra", "evaluate_r", "fingerprint", "r_matrix", "run_cli", "sigma", "spectral",
    "suite_names", "vector_rep", "verify",
]
