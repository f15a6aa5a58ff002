"""Syntax trees for the analysed language.

Conditions of ``if``/``while`` are checked by the parser and then dropped:
the flow rules never look at them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

Pos = tuple[int, int]


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Bin:
    op: str  # one of "+", "-", "*"
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=(0, 0), compare=False, repr=False)

    def is_flat(self) -> bool:
        return isinstance(self.left, Var) and isinstance(self.right, Var)


Expr = Union[Var, Bin]


@dataclass(frozen=True)
class Assign:
    target: str
    expr: Expr
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class If:
    then: tuple["Cmd", ...]
    orelse: tuple["Cmd", ...] = ()
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class While:
    body: tuple["Cmd", ...]
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Loop:
    counter: str
    body: tuple["Cmd", ...]
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class CallAssign:
    target: str
    callee: str
    args: tuple[str, ...]
    pos: Pos = field(default=(0, 0), compare=False, repr=False)


Cmd = Union[Assign, If, While, Loop, CallAssign]


@dataclass(frozen=True)
class FunDecl:
    name: str
    params: tuple[str, ...]
    body: tuple[Cmd, ...]
    ret: str | None = None
    pos: Pos = field(default=(0, 0), compare=False, repr=False)
    line_count: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Program:
    decls: tuple[FunDecl, ...]

    def get(self, name: str) -> FunDecl:
        for d in self.decls:
            if d.name == name:
                return d
        raise KeyError(name)

    def names(self) -> list[str]:
        return [d.name for d in self.decls]


def expr_vars(e: Expr) -> Iterator[str]:
    if isinstance(e, Var):
        yield e.name
    else:
        yield from expr_vars(e.left)
        yield from expr_vars(e.right)


def walk(cmds: tuple[Cmd, ...]) -> Iterator[Cmd]:
    """Pre-order traversal of a command sequence."""
    for c in cmds:
        yield c
        if isinstance(c, If):
            yield from walk(c.then)
            yield from walk(c.orelse)
        elif isinstance(c, (While, Loop)):
            yield from walk(c.body)


def calls_in(f: FunDecl) -> list[CallAssign]:
    return [c for c in walk(f.body) if isinstance(c, CallAssign)]
