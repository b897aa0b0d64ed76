"""Exact decision of semi-cubic hyponormality with positive determinant
coefficients for weighted shifts with a Stampfli recursive tail."""

from .decide import Decision, Outcome, decide_semicubic_pdc, prop51_check
from .exactnum import QuadraticNumber, UniPolynomial, poly_eval, quad_sign
from .shift import BackwardExtensionSpec, make_spec, make_tail

__all__ = [
    "BackwardExtensionSpec",
    "Decision",
    "Outcome",
    "QuadraticNumber",
    "UniPolynomial",
    "decide_semicubic_pdc",
    "make_spec",
    "make_tail",
    "poly_eval",
    "prop51_check",
    "quad_sign",
]
