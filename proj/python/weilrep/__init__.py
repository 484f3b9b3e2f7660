"""Finite Weil representation checks (bindings to the C++ core)."""

import json

from ._core import (
    Error,
    InvalidParams,
    UnknownSuite,
    abelianization_exponent,
    character,
    commutant_dim,
    dft_det,
    dft_matrix,
    emit_table,
    find_conjugator,
    gauss_sum,
    jacobi,
    legendre,
    proportionality_constant,
    qr_verify,
    rho,
    run_suite_json,
    sl2_order,
    suite_names,
)


def run_suite(name, n=None, primes_up_to=None, backend="exact", tol=None, seed=1, timing=True):
    """Run a named suite and return the report as a dict."""
    return json.loads(run_suite_json(name, n, primes_up_to, backend, tol, seed, timing))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
