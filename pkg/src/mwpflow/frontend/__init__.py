from .ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Program, Var, While, calls_in, walk
from .parser import FrontendError, NameResolutionError, ParseError, UnsupportedConstruct, parse, parse_file, tokenize
from .printer import format_function, format_program
from .transform import InliningError, collect_vars, inline_call, normalize_function, normalize_three_address

__all__ = [
    "Assign",
    "Bin",
    "CallAssign",
    "Cmd",
    "Expr",
    "FrontendError",
    "FunDecl",
    "If",
    "InliningError",
    "Loop",
    "NameResolutionError",
    "ParseError",
    "Program",
    "UnsupportedConstruct",
    "Var",
    "While",
    "calls_in",
    "collect_vars",
    "format_function",
    "format_program",
    "inline_call",
    "normalize_function",
    "normalize_three_address",
    "parse",
    "parse_file",
    "tokenize",
    "walk",
]
