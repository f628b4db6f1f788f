"""Exact local computations for GL(2) periods over cubic etale algebras."""

from .decider import GPInput, PeriodReport, RULES, decide_period, enumerate_cases, hom_dim_component
from .localfield import (
    EtaleCubicAlgebra,
    GPError,
    LocalField,
    MultChar,
    Shape,
    UnsupportedCase,
    ValidationError,
    build_character,
)

__version__ = "0.1.0"

__all__ = [
    "GPInput",
    "PeriodReport",
    "RULES",
    "decide_period",
    "enumerate_cases",
    "hom_dim_component",
    "EtaleCubicAlgebra",
    "GPError",
    "LocalField",
    "MultChar",
    "Shape",
    "UnsupportedCase",
    "ValidationError",
    "build_character",
]
