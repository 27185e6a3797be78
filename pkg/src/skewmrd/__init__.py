"""Skew polynomial rings over finite fields and the MRD codes S_{n,s,k}(eta, rho, F)."""

from .codes import CodeReport, CodeSpec, code_element, nuclear_parameters, validate_condition, verify_mrd
from .gf import FieldCtx, KPoly, field_create, frobenius, norm
from .quotient import QuotientElem, QuotientRing
from .skewpoly import BudgetExceeded, SkewPoly, SkewRing, extended_gcrd, gcrd, mclm

__all__ = [
    "BudgetExceeded",
    "CodeReport",
    "CodeSpec",
    "FieldCtx",
    "KPoly",
    "QuotientElem",
    "QuotientRing",
    "SkewPoly",
    "SkewRing",
    "code_element",
    "extended_gcrd",
    "field_create",
    "frobenius",
    "gcrd",
    "mclm",
    "norm",
    "nuclear_parameters",
    "validate_condition",
    "verify_mrd",
]
