"""Exact-arithmetic checks for Vandermonde-determinant gap bounds.

Everything numeric crosses the extension boundary as decimal or "num/den"
strings; structured results are decoded from JSON into plain dicts. Fractions
can be handed to :mod:`fractions` directly, e.g.
``Fraction(k_function("3/2", 3)["value"])``.
"""

from __future__ import annotations

import json as _json

from vdgap import _core

__version__ = "0.1.0"

divisors = _core.divisors
p_adic_valuation = _core.p_adic_valuation
quad_norm = _core.quad_norm
exact_power_compare = _core.exact_power_compare
enumerate_points = _core.enumerate_points


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


k_function = _decoded(_core.k_function)
identity_check = _decoded(_core.identity_check)
gap_bound_check = _decoded(_core.gap_bound_check)
verify_identity_random = _decoded(_core.verify_identity_random)
conic_gap_check = _decoded(_core.conic_gap_check)
tight_triple = _decoded(_core.tight_triple)
divisor_gap_check = _decoded(_core.divisor_gap_check)
poly_divisor_gap_check = _decoded(_core.poly_divisor_gap_check)
arc_bound_constants = _decoded(_core.arc_bound_constants)
scalar_overlap_check = _decoded(_core.scalar_overlap_check)
measure_overlap_check = _decoded(_core.measure_overlap_check)
gcd_overlap_check = _decoded(_core.gcd_overlap_check)

__all__ = [
    "arc_bound_constants",
    "conic_gap_check",
    "divisor_gap_check",
    "divisors",
    "enumerate_points",
    "exact_power_compare",
    "gap_bound_check",
    "gcd_overlap_check",
    "identity_check",
    "k_function",
    "measure_overlap_check",
    "p_adic_valuation",
    "poly_divisor_gap_check",
    "quad_norm",
    "scalar_overlap_check",
    "tight_triple",
    "verify_identity_random",
]
