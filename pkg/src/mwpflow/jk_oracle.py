"""Exhaustive enumeration of the original non-deterministic flow calculus.

Only meant for small call-free programs: the number of derivations grows
exponentially with the number of additions.  Matrices are plain coefficient
matrices without infinity; a loop whose side condition fails simply
contributes no derivation.
"""

from __future__ import annotations

from typing import Sequence

from .analysis.program import analyze_function
from .frontend.ast import Assign, CallAssign, Cmd, Expr, FunDecl, If, Loop, Var, While, walk
from .frontend.transform import collect_vars
from .matrix import CoeffMatrix, cm_add, cm_column_replace, cm_has_infinity, cm_identity, cm_mul, cm_star
from .semiring import M, P, W, ZERO, Coeff

CoeffVector = tuple[Coeff, ...]
DEFAULT_BUDGET = 8


class BudgetExceeded(ValueError):
    pass


class OracleUnsupported(ValueError):
    pass


def _unit(n: int, entries: dict[int, Coeff]) -> CoeffVector:
    return tuple(entries.get(k, ZERO) for k in range(n))


def jk_expr(e: Expr, vars: Sequence[str], bare_weak: bool = True) -> set[CoeffVector]:
    """Vectors derivable for a flat expression.

    ``bare_weak`` admits the weak vector on a bare variable, which is always
    dominated by the copy vector.
    """
    n = len(vars)
    if isinstance(e, Var):
        i = vars.index(e.name)
        out = {_unit(n, {i: M})}
        if bare_weak:
            out.add(_unit(n, {i: W}))
        return out
    i, j = vars.index(e.left.name), vars.index(e.right.name)
    weak = _unit(n, {i: W}) if i == j else _unit(n, {i: W, j: W})
    if e.op == "*":
        return {weak}
    if i == j:
        return {_unit(n, {i: P}), weak}
    return {_unit(n, {i: P, j: M}), _unit(n, {i: M, j: P}), weak}


class Oracle:
    def __init__(self, vars: Sequence[str], bare_weak: bool = True):
        self.vars = tuple(vars)
        self.n = len(self.vars)
        self.bare_weak = bare_weak
        self._memo: dict[int, frozenset[CoeffMatrix]] = {}

    def cmds(self, cmds: Sequence[Cmd]) -> frozenset[CoeffMatrix]:
        acc: frozenset[CoeffMatrix] = frozenset({cm_identity(self.n)})
        for c in cmds:
            nxt = self.cmd(c)
            acc = frozenset(cm_mul(a, b) for a in acc for b in nxt)
            if not acc:
                break
        return acc

    def cmd(self, c: Cmd) -> frozenset[CoeffMatrix]:
        key = id(c)
        if key not in self._memo:
            self._memo[key] = self._cmd(c)
        return self._memo[key]

    def _cmd(self, c: Cmd) -> frozenset[CoeffMatrix]:
        one = cm_identity(self.n)
        if isinstance(c, Assign):
            j = self.vars.index(c.target)
            return frozenset(cm_column_replace(one, j, v) for v in jk_expr(c.expr, self.vars, self.bare_weak))
        if isinstance(c, If):
            return frozenset(cm_add(a, b) for a in self.cmds(c.then) for b in self.cmds(c.orelse))
        if isinstance(c, Loop):
            l = self.vars.index(c.counter)
            out = set()
            for body in self.cmds(c.body):
                star = cm_star(body)
                if any(star[i][i] != M for i in range(self.n)):
                    continue
                cols = {j for j in range(self.n) if any(star[i][j] == P for i in range(self.n))}
                rows = [list(r) for r in star]
                for j in cols:
                    rows[l][j] = P
                out.add(tuple(tuple(r) for r in rows))
            return frozenset(out)
        if isinstance(c, While):
            out = set()
            for body in self.cmds(c.body):
                star = cm_star(body)
                if any(star[i][i] != M for i in range(self.n)):
                    continue
                if any(x == P for row in star for x in row):
                    continue
                out.add(star)
            return frozenset(out)
        if isinstance(c, CallAssign):
            raise OracleUnsupported("the original calculus has no rule for function calls")
        raise TypeError(f"not a command: {c!r}")


def jk_cmd(c: Cmd | Sequence[Cmd], vars: Sequence[str], bare_weak: bool = True) -> frozenset[CoeffMatrix]:
    oracle = Oracle(vars, bare_weak)
    if isinstance(c, (list, tuple)):
        return oracle.cmds(c)
    return oracle.cmd(c)


def count_choices(cmds: Sequence[Cmd]) -> int:
    return sum(
        1 for c in walk(tuple(cmds)) if isinstance(c, Assign) and not isinstance(c.expr, Var) and c.expr.op != "*"
    )


def _dominates(big: CoeffMatrix, small: CoeffMatrix) -> bool:
    return all(x >= y for rb, rs in zip(big, small) for x, y in zip(rb, rs))


def _check_supported(f: FunDecl, budget: int) -> None:
    if any(isinstance(c, CallAssign) for c in walk(f.body)):
        raise OracleUnsupported("the original calculus has no rule for function calls")
    if count_choices(f.body) > budget:
        raise BudgetExceeded(f"more than {budget} choice positions")


def deterministic_matrices(f: FunDecl, budget: int = DEFAULT_BUDGET) -> frozenset[CoeffMatrix]:
    """``{M[a] : M[a] has no infinity}`` by brute force over all assignments."""
    _check_supported(f, budget)
    res = analyze_function(f)
    out = set()
    for a in res.domains.assignments(None):
        m = res.evaluate(a)
        if not cm_has_infinity(m):
            out.add(m)
    return frozenset(out)


def jk_equals_deterministic(f: FunDecl, budget: int = DEFAULT_BUDGET) -> bool:
    """Both calculi derive the same matrices, up to dominated bare-variable weak derivations.

    Derivations using the weak vector on a bare variable are compared
    separately: each must dominate a derivation of the restricted calculus.
    """
    _check_supported(f, budget)
    vars = collect_vars(f)
    det = deterministic_matrices(f, budget)
    strict = jk_cmd(f.body, vars, bare_weak=False)
    if det != strict:
        return False
    full = jk_cmd(f.body, vars, bare_weak=True)
    return strict <= full and all(any(_dominates(x, y) for y in strict) for x in full)


def oracle_report(f: FunDecl, budget: int = DEFAULT_BUDGET) -> dict:
    _check_supported(f, budget)
    vars = collect_vars(f)
    det = deterministic_matrices(f, budget)
    strict = jk_cmd(f.body, vars, bare_weak=False)
    return {
        "agree": jk_equals_deterministic(f, budget),
        "deterministic": len(det),
        "oracle": len(strict),
        "only_deterministic": len(det - strict),
        "only_oracle": len(strict - det),
    }


__all__ = [
    "BudgetExceeded",
    "Oracle",
    "OracleUnsupported",
    "count_choices",
    "deterministic_matrices",
    "jk_cmd",
    "jk_equals_deterministic",
    "jk_expr",
    "oracle_report",
]
