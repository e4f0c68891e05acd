"""Exact bimatroid, matroid-morphism and Lorentzian-polynomial toolkit.

Thin Python surface over the C++ core.  Structured data crosses the boundary
as JSON text in the library's canonical schemas; helpers here decode it so
callers can work with plain dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    Bimatroid,
    Matroid,
    MatroidMorphism,
    ParseError,
    basis_counts,
    basis_generating_poly_json,
    bond,
    cauchy_binet_json,
    check_mason_json,
    check_theorem_A_json,
    check_theorem_B_json,
    check_theorem_C_json,
    check_thmC_pipeline_json,
    check_weak_basis_poly_lorentzian_json,
    extended_matroid,
    frenk_agrees,
    identity_bimatroid,
    is_log_concave,
    is_lorentzian_json,
    is_morphism,
    is_quotient,
    is_strictly_lorentzian_json,
    is_ultra_log_concave,
    nullity,
    product,
    tilde_matroid,
    uniform_matroid,
    validate_bimatroid,
    weak_basis_poly_json,
)

__all__ = [
    "Bimatroid",
    "Matroid",
    "MatroidMorphism",
    "ParseError",
    "basis_counts",
    "basis_generating_poly_json",
    "bond",
    "cauchy_binet_json",
    "check_mason",
    "check_mason_json",
    "check_theorem_A",
    "check_theorem_A_json",
    "check_theorem_B",
    "check_theorem_B_json",
    "check_theorem_C",
    "check_theorem_C_json",
    "check_thmC_pipeline",
    "check_thmC_pipeline_json",
    "check_weak_basis_poly_lorentzian_json",
    "extended_matroid",
    "frenk_agrees",
    "identity_bimatroid",
    "is_log_concave",
    "is_lorentzian_json",
    "is_morphism",
    "is_quotient",
    "is_strictly_lorentzian_json",
    "is_ultra_log_concave",
    "nullity",
    "product",
    "tilde_matroid",
    "uniform_matroid",
    "validate_bimatroid",
    "weak_basis_poly_json",
]


def _report(text):
    """Decode a canonical report JSON string into a dict."""
    return _json.loads(text)


def check_theorem_A(bimatroid):
    return _report(check_theorem_A_json(bimatroid))


def check_theorem_B(bimatroid):
    return _report(check_theorem_B_json(bimatroid))


def check_theorem_C(morphism):
    return _report(check_theorem_C_json(morphism))


def check_mason(matroid):
    return _report(check_mason_json(matroid))


def check_thmC_pipeline(morphism):
    return _report(check_thmC_pipeline_json(morphism))
