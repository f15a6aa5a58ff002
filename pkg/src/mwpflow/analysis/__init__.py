from .bounds import UnboundedVector, render_bound
from .engine import AnalysisError, CalleeView, CallSite, ChoiceAllocator, Engine, UnknownFunction, UnknownVariable
from .program import (
    AnalysisResult,
    FunctionSummary,
    MutualRecursion,
    NoFiniteSolution,
    ProgramAnalysis,
    analyze_function,
    analyze_program,
    map_assignment_psi,
    solve_recursion,
    summarize,
)

__all__ = [
    "AnalysisError",
    "AnalysisResult",
    "CalleeView",
    "CallSite",
    "ChoiceAllocator",
    "Engine",
    "FunctionSummary",
    "MutualRecursion",
    "NoFiniteSolution",
    "ProgramAnalysis",
    "UnboundedVector",
    "UnknownFunction",
    "UnknownVariable",
    "analyze_function",
    "analyze_program",
    "map_assignment_psi",
    "render_bound",
    "solve_recursion",
    "summarize",
]
