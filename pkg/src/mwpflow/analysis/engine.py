"""The deterministic flow calculus: one polynomial matrix per command."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..deltagraph import DeltaGraph
from ..frontend.ast import Assign, Bin, CallAssign, Cmd, Expr, FunDecl, If, Loop, Var, While
from ..matrix import PolyMatrix, PolyVector, column_replace, mat_add, mat_mul, mat_star, with_entries
from ..polynomial import ONE_POLY, ZERO_POLY, ChoiceDomains, Monomial, Polynomial, delta, poly_add
from ..semiring import INF, M, P, W, Coeff


class AnalysisError(Exception):
    pass


class UnknownVariable(AnalysisError):
    pass


class UnknownFunction(AnalysisError):
    pass


@dataclass
class CallSite:
    """Where a call consumed (or would have consumed) a choice position."""

    callee: str
    offset: int  # positions allocated before this call
    position: int | None  # None when the summary has a single vector
    size: int


@dataclass
class ChoiceAllocator:
    sizes: list[int] = field(default_factory=list)
    origins: list[str] = field(default_factory=list)
    call_sites: list[CallSite] = field(default_factory=list)

    def alloc(self, size: int, origin: str) -> int:
        self.sizes.append(size)
        self.origins.append(origin)
        return len(self.sizes) - 1

    def domains(self) -> ChoiceDomains:
        return ChoiceDomains(tuple(self.sizes))


@dataclass(frozen=True)
class CalleeView:
    """What a call site needs to know about the called function."""

    params: tuple[str, ...]
    vectors: tuple[tuple[Coeff, ...], ...]  # one entry per parameter


SummaryLookup = Callable[[str], CalleeView]


def _addition_entries(q: int) -> tuple[Polynomial, Polynomial]:
    first = Polynomial([delta(0, q, M), delta(1, q, P), delta(2, q, W)])
    second = Polynomial([delta(0, q, P), delta(1, q, M), delta(2, q, W)])
    return first, second


class Engine:
    """Derives matrices for the commands of one function body.

    ``summaries`` resolves a callee name to its summary; ``graph`` receives
    every infinite monomial at the point where the rules create it.
    """

    def __init__(
        self,
        vars: Sequence[str],
        summaries: SummaryLookup | None = None,
        allocator: ChoiceAllocator | None = None,
        graph: DeltaGraph | None = None,
    ):
        self.vars = tuple(vars)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.summaries = summaries
        self.allocator = allocator or ChoiceAllocator()
        self.graph = graph if graph is not None else DeltaGraph(self.allocator.sizes)
        self.diagnostics: list[str] = []
        self.n = len(self.vars)

    def idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def _record(self, monos) -> None:
        for mo in monos:
            self.graph.insert(mo.deltas)

    # expressions

    def analyze_expr(self, e: Expr, target: str | None = None) -> PolyVector:
        col = [ZERO_POLY] * self.n
        if isinstance(e, Var):
            col[self.idx(e.name)] = ONE_POLY
            return tuple(col)
        if not e.is_flat():
            raise AnalysisError("expression is not in three-address form")
        i, j = self.idx(e.left.name), self.idx(e.right.name)
        if e.op == "*":
            w = Polynomial.const(W)
            col[i] = w
            col[j] = w
            return tuple(col)
        q = self.allocator.alloc(3, f"{e.op} at {e.pos[0]}:{e.pos[1]}")
        first, second = _addition_entries(q)
        # choice 0 gives the copy-like grade m to the operand being overwritten
        if target is not None and target == e.right.name and target != e.left.name:
            i, j = j, i
        col[i] = poly_add(col[i], first)
        col[j] = poly_add(col[j], second)
        return tuple(col)

    # commands

    def identity(self) -> PolyMatrix:
        return PolyMatrix.identity(self.vars)

    def analyze_cmds(self, cmds: Sequence[Cmd]) -> PolyMatrix:
        result = None
        for c in cmds:
            m = self.analyze_cmd(c)
            result = m if result is None else mat_mul(result, m)
        return result if result is not None else self.identity()

    def analyze_cmd(self, c: Cmd) -> PolyMatrix:
        if isinstance(c, Assign):
            return column_replace(self.identity(), self.idx(c.target), self.analyze_expr(c.expr, c.target))
        if isinstance(c, If):
            return mat_add(self.analyze_cmds(c.then), self.analyze_cmds(c.orelse))
        if isinstance(c, Loop):
            return self.loop_rule(self.analyze_cmds(c.body), self.idx(c.counter))
        if isinstance(c, While):
            return self.loop_rule(self.analyze_cmds(c.body), None)
        if isinstance(c, CallAssign):
            return self.call_rule(c)
        raise AnalysisError(f"not a command: {c!r}")

    def loop_rule(self, body: PolyMatrix, counter: int | None) -> PolyMatrix:
        """``loop`` when ``counter`` is given, ``while`` otherwise."""
        star = mat_star(body)
        updates: dict[tuple[int, int], list[Monomial]] = {}
        created: list[Monomial] = []
        for j in range(self.n):
            for mo in star.entries[j][j].monomials:
                if mo.scalar > M:
                    inf = Monomial._make(INF, mo.deltas)
                    updates.setdefault((j, j), []).append(inf)
                    created.append(inf)
        for i in range(self.n):
            for j in range(self.n):
                for mo in star.entries[i][j].monomials:
                    if mo.scalar is not P:
                        continue
                    if counter is None:
                        inf = Monomial._make(INF, mo.deltas)
                        updates.setdefault((i, j), []).append(inf)
                        created.append(inf)
                    else:
                        updates.setdefault((counter, j), []).append(mo)
        self._record(created)
        return with_entries(star, updates) if updates else star

    def call_rule(self, c: CallAssign) -> PolyMatrix:
        if self.summaries is None:
            raise UnknownFunction(f"no summary available for {c.callee!r}")
        view = self.summaries(c.callee)
        if len(view.params) != len(c.args):
            raise AnalysisError(f"{c.callee!r} takes {len(view.params)} arguments, {len(c.args)} given")
        rows = [self.idx(a) for a in c.args]
        target = self.idx(c.target)
        k = len(view.vectors)
        col: list[Polynomial] = [ZERO_POLY] * self.n
        offset = len(self.allocator.sizes)
        if k == 0:
            inf = Polynomial.const(INF)
            for r in set(rows) | {target}:
                col[r] = inf
            self._record(inf.monomials)
            self.diagnostics.append(
                f"call to {c.callee!r} at {c.pos[0]}:{c.pos[1]}: callee has no bound, result marked infinite"
            )
            self.allocator.call_sites.append(CallSite(c.callee, offset, None, 0))
        elif k == 1:
            for r, coeff in zip(rows, view.vectors[0]):
                col[r] = poly_add(col[r], Polynomial.const(coeff))
            self.allocator.call_sites.append(CallSite(c.callee, offset, None, 1))
        else:
            q = self.allocator.alloc(k, f"call {c.callee} at {c.pos[0]}:{c.pos[1]}")
            self.allocator.call_sites.append(CallSite(c.callee, offset, q, k))
            per_row: list[list[Monomial]] = [[] for _ in range(self.n)]
            for t, vec in enumerate(view.vectors):
                for r, coeff in zip(rows, vec):
                    if coeff > 0:
                        per_row[r].append(delta(t, q, coeff))
            col = [Polynomial(ms) if ms else ZERO_POLY for ms in per_row]
        return column_replace(self.identity(), target, tuple(col))


def analyze_body(
    f: FunDecl,
    vars: Sequence[str],
    summaries: SummaryLookup | None = None,
) -> tuple[PolyMatrix, ChoiceAllocator, DeltaGraph, list[str]]:
    engine = Engine(vars, summaries)
    matrix = engine.analyze_cmds(f.body)
    return matrix, engine.allocator, engine.graph, engine.diagnostics
