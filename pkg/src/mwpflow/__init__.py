"""Polynomial growth certification for a small imperative language via mwp flows."""

from .analysis import AnalysisResult, ProgramAnalysis, analyze_program, render_bound
from .frontend import parse
from .matrix import PolyMatrix
from .polynomial import ChoiceDomains, Monomial, Polynomial, delta
from .semiring import INF, M, P, W, ZERO, Coeff

__version__ = "0.1.0"

__all__ = [
    "INF",
    "M",
    "P",
    "W",
    "ZERO",
    "AnalysisResult",
    "ChoiceDomains",
    "Coeff",
    "Monomial",
    "PolyMatrix",
    "Polynomial",
    "ProgramAnalysis",
    "analyze_program",
    "delta",
    "parse",
    "render_bound",
]
