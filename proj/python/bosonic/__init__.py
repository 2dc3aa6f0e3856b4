"""Bosonic extensions of quantum groups: normal forms, braid actions and PBW bases."""

from ._core import (
    Algebra,
    CartanDatum,
    Element,
    GuardrailError,
    ParseError,
    Pbw,
    braid_equal,
    braid_gcd,
    garside_normal_form,
    run_suite,
    suite_names,
)

__all__ = [
    "Algebra",
    "CartanDatum",
    "Element",
    "GuardrailError",
    "ParseError",
    "Pbw",
    "braid_equal",
    "braid_gcd",
    "garside_normal_form",
    "run_suite",
    "suite_names",
]
