"""Test helpers: a concrete interpreter and program generators."""

from __future__ import annotations

import itertools
import random
from pathlib import Path
from typing import Iterator, Sequence

from mwpflow.frontend.ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Program, Var, While
from mwpflow.matrix import PolyMatrix
from mwpflow.polynomial import Monomial, Polynomial
from mwpflow.semiring import INF, M, P, W

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
VARS3 = ("X1", "X2", "X3")
ACCEPTANCE_LINES: list[str] = []


class Stream:
    """Seeded source of branch decisions shared by every condition."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def flip(self) -> bool:
        return self.rng.random() < 0.5


def eval_expr(e: Expr, store: dict[str, int]) -> int:
    if isinstance(e, Var):
        return store.get(e.name, 0)
    a, b = eval_expr(e.left, store), eval_expr(e.right, store)
    return a + b if e.op == "+" else a - b if e.op == "-" else a * b


def run_cmds(
    cmds: Sequence[Cmd],
    store: dict[str, int],
    stream: Stream,
    program: Program | None = None,
    max_iter: int = 3,
) -> None:
    for c in cmds:
        if isinstance(c, Assign):
            store[c.target] = eval_expr(c.expr, store)
        elif isinstance(c, If):
            run_cmds(c.then if stream.flip() else c.orelse, store, stream, program, max_iter)
        elif isinstance(c, While):
            k = 0
            while k < max_iter and stream.flip():
                run_cmds(c.body, store, stream, program, max_iter)
                k += 1
        elif isinstance(c, Loop):
            for _ in range(min(max(store.get(c.counter, 0), 0), max_iter)):
                run_cmds(c.body, store, stream, program, max_iter)
        elif isinstance(c, CallAssign):
            callee = program.get(c.callee)
            inner = {p: store.get(a, 0) for p, a in zip(callee.params, c.args)}
            run_cmds(callee.body, inner, stream, program, max_iter)
            store[c.target] = inner.get(callee.ret, 0)


def run_function(f: FunDecl, inputs: dict[str, int], seed: int, program: Program | None = None) -> dict[str, int]:
    store = dict(inputs)
    run_cmds(f.body, store, Stream(seed), program)
    return store


# enumeration of small call-free programs


def atoms(vars: Sequence[str] = VARS3) -> list[Assign]:
    out: list[Assign] = []
    for t in vars:
        for x in vars:
            out.append(Assign(t, Var(x)))
        for op in "+-*":
            for x in vars:
                for y in vars:
                    out.append(Assign(t, Bin(op, Var(x), Var(y))))
    return out


def shapes(n: int) -> Iterator[tuple]:
    """Command sequences with exactly ``n`` command nodes; ``"A"`` marks an assignment slot."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for head in single(first):
            for tail in shapes(n - first):
                yield (head,) + tail


def single(n: int) -> Iterator:
    if n == 1:
        yield "A"
    if n >= 2:
        for body in shapes(n - 1):
            if body:
                yield ("W", body)
                for counter in VARS3:
                    yield ("L", counter, body)
        for k in range(0, n):
            for then in shapes(k):
                for orelse in shapes(n - 1 - k):
                    if then or orelse:
                        yield ("I", then, orelse)


def fill(shape: tuple, pick) -> tuple[Cmd, ...]:
    out: list[Cmd] = []
    for node in shape:
        if node == "A":
            out.append(pick())
        elif node[0] == "W":
            out.append(While(fill(node[1], pick)))
        elif node[0] == "L":
            out.append(Loop(node[1], fill(node[2], pick)))
        else:
            out.append(If(fill(node[1], pick), fill(node[2], pick)))
    return tuple(out)


def enumerated_corpus(max_cmds: int = 4, per_shape: int = 12, seed: int = 2024) -> list[FunDecl]:
    """Every control shape with up to ``max_cmds`` commands over three variables.

    Shapes are enumerated exhaustively; each shape gets ``per_shape``
    assignment fillings drawn from the full atom set with a fixed seed, and
    single-assignment programs are enumerated over the whole atom set.
    """
    rng = random.Random(seed)
    pool = atoms()
    progs: list[FunDecl] = []
    for a in pool:
        progs.append(FunDecl("p", VARS3, (a,), None))
    for n in range(2, max_cmds + 1):
        for shape in shapes(n):
            for _ in range(per_shape):
                progs.append(FunDecl("p", VARS3, fill(shape, lambda: rng.choice(pool)), None))
    return progs


def random_program(rng: random.Random, max_cmds: int = 5, vars: Sequence[str] = VARS3) -> FunDecl:
    pool = atoms(vars)
    budget = [rng.randint(1, max_cmds)]

    def seq(depth: int) -> tuple[Cmd, ...]:
        out: list[Cmd] = []
        while budget[0] > 0 and (not out or rng.random() < 0.6):
            budget[0] -= 1
            r = rng.random()
            if depth < 2 and r < 0.15 and budget[0] > 0:
                out.append(While(seq(depth + 1)))
            elif depth < 2 and r < 0.3 and budget[0] > 0:
                out.append(Loop(rng.choice(list(vars)), seq(depth + 1)))
            elif depth < 2 and r < 0.45 and budget[0] > 0:
                out.append(If(seq(depth + 1), seq(depth + 1) if rng.random() < 0.7 else ()))
            else:
                out.append(rng.choice(pool))
        return tuple(out)

    return FunDecl("p", tuple(vars), seq(0), None)


def corpus_files() -> list[Path]:
    return sorted(CORPUS.glob("*.c"))


def all_assignments(sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(s) for s in sizes))


# random algebra values


def random_monomials(rng: random.Random, sizes: Sequence[int], max_monos: int, inf_rate: float = 0.1) -> list[Monomial]:
    out = []
    for _ in range(rng.randint(0, max_monos)):
        scalar = INF if rng.random() < inf_rate else rng.choice((M, W, P))
        positions = [q for q in range(len(sizes)) if rng.random() < 0.5]
        out.append(Monomial(scalar, [(q, rng.randrange(sizes[q])) for q in positions]))
    return out


def random_poly(rng: random.Random, sizes: Sequence[int], max_monos: int = 6, inf_rate: float = 0.1) -> Polynomial:
    return Polynomial(random_monomials(rng, sizes, max_monos, inf_rate))


def random_matrix(rng: random.Random, n: int, sizes: Sequence[int], max_monos: int = 3) -> PolyMatrix:
    names = [f"X{i + 1}" for i in range(n)]
    rows = [[random_poly(rng, sizes, max_monos, 0.05) if rng.random() < 0.6 else Polynomial() for _ in range(n)] for _ in range(n)]
    return PolyMatrix(names, rows)
