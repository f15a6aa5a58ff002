"""Whole-program analysis: function summaries, calls, self-recursion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..deltagraph import DeltaGraph
from ..frontend.ast import FunDecl, Program, calls_in
from ..frontend.transform import collect_vars, normalize_function
from ..matrix import CoeffMatrix, PolyMatrix, cm_has_infinity, mat_eval
from ..polynomial import DEFAULT_ENUMERATION_CAP, Assignment, ChoiceDomains, poly_eval
from ..semiring import FINITE, Coeff
from .engine import AnalysisError, CalleeView, CallSite, Engine, UnknownFunction


class NoFiniteSolution(AnalysisError):
    pass


class MutualRecursion(AnalysisError):
    pass


@dataclass
class AnalysisResult:
    name: str
    vars: tuple[str, ...]
    matrix: PolyMatrix
    domains: ChoiceDomains
    graph: DeltaGraph
    origins: tuple[str, ...] = ()
    call_sites: tuple[CallSite, ...] = ()
    diagnostics: list[str] = field(default_factory=list)

    @property
    def bounded(self) -> bool:
        return not self.graph.is_complete()

    def free_assignments(self) -> Iterator[tuple[int, ...]]:
        return self.graph.free_assignments()

    def evaluate(self, assignment: Assignment) -> CoeffMatrix:
        return mat_eval(self.matrix, assignment)


@dataclass
class FunctionSummary:
    name: str
    params: tuple[str, ...]
    rows: tuple[str, ...]  # params, then the returned variable if it is not a parameter
    vectors: tuple[tuple[Coeff, ...], ...]
    representatives: tuple[tuple[int, ...], ...]  # one callee assignment per vector
    systems: tuple[tuple[tuple[int, ...], tuple[tuple[Coeff, ...], ...]], ...] = ()  # recursion only
    diagnostics: list[str] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.vectors)

    def view(self) -> CalleeView:
        r = len(self.params)
        return CalleeView(self.params, tuple(v[:r] for v in self.vectors))


def summary_rows(f: FunDecl) -> tuple[str, ...]:
    if f.ret is None:
        raise AnalysisError(f"{f.name!r} returns no value and cannot be called for one")
    return f.params if f.ret in f.params else f.params + (f.ret,)


def summarize(f: FunDecl, result: AnalysisResult, limit: int | None = DEFAULT_ENUMERATION_CAP) -> FunctionSummary:
    """Distinct return columns over all infinity-free assignments, first witness kept."""
    rows = summary_rows(f)
    r_col = result.vars.index(f.ret)
    row_idx = [result.vars.index(v) for v in rows]
    column = [result.matrix.entries[i][r_col] for i in row_idx]
    seen: dict[tuple[Coeff, ...], tuple[int, ...]] = {}
    for count, a in enumerate(result.free_assignments()):
        if limit is not None and count >= limit:
            raise AnalysisError(f"more than {limit} bounded assignments in {f.name!r}")
        vec = tuple(poly_eval(p, a) for p in column)
        seen.setdefault(vec, a)
    return FunctionSummary(f.name, f.params, rows, tuple(seen), tuple(seen.values()))


def _minimal(vectors) -> list[tuple[Coeff, ...]]:
    vs = sorted(set(vectors))
    return [v for v in vs if not any(u != v and all(x <= y for x, y in zip(u, v)) for u in vs)]


class ProgramAnalysis:
    """Lazily analyses functions and caches their summaries."""

    def __init__(self, program: Program, normalize: bool = True):
        decls = [normalize_function(f) if normalize else f for f in program.decls]
        self.decls = {f.name: f for f in decls}
        self.order = [f.name for f in decls]
        self.results: dict[str, AnalysisResult] = {}
        self.summaries: dict[str, FunctionSummary] = {}
        self._in_progress: set[str] = set()

    def lookup(self, name: str) -> CalleeView:
        return self.summary(name).view()

    def summary(self, name: str) -> FunctionSummary:
        if name in self.summaries:
            return self.summaries[name]
        if name not in self.decls:
            raise UnknownFunction(f"unknown function {name!r}")
        if name in self._in_progress:
            raise MutualRecursion(f"mutual recursion through {name!r} is not supported")
        f = self.decls[name]
        self._in_progress.add(name)
        try:
            if self.is_recursive(f):
                try:
                    s = solve_recursion(f, self.lookup)
                except NoFiniteSolution as exc:
                    s = FunctionSummary(f.name, f.params, summary_rows(f), (), (), diagnostics=[str(exc)])
            else:
                s = summarize(f, self.result(name))
        finally:
            self._in_progress.discard(name)
        if not s.vectors and not s.diagnostics:
            s.diagnostics.append(f"{name!r} has no infinity-free assignment")
        self.summaries[name] = s
        return s

    @staticmethod
    def is_recursive(f: FunDecl) -> bool:
        return any(c.callee == f.name for c in calls_in(f))

    def result(self, name: str) -> AnalysisResult:
        if name in self.results:
            return self.results[name]
        f = self.decls[name]
        if self.is_recursive(f):
            self.summary(name)
        res = analyze_function(f, self.lookup)
        self.results[name] = res
        return res

    def run(self) -> dict[str, AnalysisResult]:
        return {name: self.result(name) for name in self.order}


def analyze_function(f: FunDecl, lookup=None) -> AnalysisResult:
    vars = collect_vars(f)
    engine = Engine(vars, lookup)
    matrix = engine.analyze_cmds(f.body)
    alloc = engine.allocator
    return AnalysisResult(
        f.name,
        tuple(vars),
        matrix,
        alloc.domains(),
        engine.graph,
        tuple(alloc.origins),
        tuple(alloc.call_sites),
        engine.diagnostics,
    )


def analyze_program(program: Program, normalize: bool = True) -> dict[str, AnalysisResult]:
    return ProgramAnalysis(program, normalize).run()


def solve_recursion(f: FunDecl, lookup=None, cap: int | None = DEFAULT_ENUMERATION_CAP) -> FunctionSummary:
    """Summary of a self-recursive function by brute-force fixpoint search.

    The self-call is given a concrete column ``v`` over the parameters; for
    each assignment of the remaining choices (one equation system each) the
    solutions are the ``v`` reproduced by the returned column with no infinite
    coefficient anywhere.  Within a system, a variable that is zero in every
    solution stays zero and the others must be non-zero; the minimal such
    solutions are kept.  The summary holds the minimal vectors over all systems.
    """
    if f.ret is None:
        raise AnalysisError(f"{f.name!r} returns no value")
    vars = collect_vars(f)
    rows = summary_rows(f)
    r = len(f.params)
    r_col = vars.index(f.ret)
    param_idx = [vars.index(p) for p in f.params]
    ret_row = None if f.ret in f.params else vars.index(f.ret)

    def views(v):
        def look(name: str) -> CalleeView:
            if name == f.name:
                return CalleeView(f.params, (v,))
            if lookup is None:
                raise UnknownFunction(f"unknown function {name!r}")
            return lookup(name)

        return look

    analyses = []
    domains = None
    for v in itertools.product(FINITE, repeat=r):
        engine = Engine(vars, views(v))
        matrix = engine.analyze_cmds(f.body)
        analyses.append((v, matrix, engine.graph))
        domains = engine.allocator.domains()

    systems = []
    for a in domains.assignments(cap):
        sols: dict[tuple[Coeff, ...], Coeff | None] = {}
        for v, matrix, graph in analyses:
            if graph.matches(a):
                continue
            m = mat_eval(matrix, a)
            if cm_has_infinity(m):
                continue
            if tuple(m[i][r_col] for i in param_idx) == v:
                sols[v] = None if ret_row is None else m[ret_row][r_col]
        if not sols:
            continue
        always_zero = [all(v[k] == 0 for v in sols) for k in range(r)]
        kept = [v for v in sols if all(always_zero[k] or v[k] > 0 for k in range(r))]
        minimal = _minimal(kept)
        systems.append((a, tuple(minimal), {v: sols[v] for v in minimal}))

    candidates = {}
    for a, minimal, extra in systems:
        for v in minimal:
            candidates.setdefault(v, (a, extra[v]))
    best = _minimal(candidates)
    if not best:
        raise NoFiniteSolution(f"no infinity-free solution for the recursive function {f.name!r}")
    vectors = []
    reps = []
    for v in best:
        a, ret_value = candidates[v]
        vectors.append(v if ret_row is None else v + (ret_value,))
        reps.append(a)
    return FunctionSummary(
        f.name,
        f.params,
        rows,
        tuple(vectors),
        tuple(reps),
        systems=tuple((a, minimal) for a, minimal, _ in systems),
    )


def map_assignment_psi(
    assignment: Assignment,
    call_sites: Sequence[CallSite],
    representatives: dict[str, Sequence[Sequence[int]]],
) -> tuple[int, ...]:
    """Assignment of the program with every call inlined, from one of the caller.

    The call's own position (if any) is replaced by the callee assignment that
    produced the selected summary vector; other positions keep their order.
    """
    out: list[int] = []
    prev = 0
    for site in sorted(call_sites, key=lambda s: s.offset):
        out.extend(assignment[prev : site.offset])
        if site.position is not None:
            tag = assignment[site.position]
            prev = site.offset + 1
        else:
            tag = 0
            prev = site.offset
        reps = representatives[site.callee]
        if not 0 <= tag < len(reps):
            raise IndexError(f"tag {tag} out of range for {site.callee!r} ({len(reps)} vectors)")
        out.extend(reps[tag])
    out.extend(assignment[prev:])
    return tuple(out)
