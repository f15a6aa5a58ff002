"""Square matrices over polynomials, and over plain coefficients.

Entry ``(i, j)`` records how the initial value of ``vars[i]`` flows into the
final value of ``vars[j]``; column ``j`` is the dependency vector of
``vars[j]``.
"""

from __future__ import annotations

from typing import Sequence

from .polynomial import (
    ONE_POLY,
    ZERO_POLY,
    Assignment,
    Monomial,
    Polynomial,
    poly_add,
    poly_eval,
    poly_mul,
)
from .semiring import INF, M, ZERO, Coeff, coeff_add, coeff_mul

CoeffMatrix = tuple[tuple[Coeff, ...], ...]
PolyVector = tuple[Polynomial, ...]


class DimensionMismatch(ValueError):
    pass


class PolyMatrix:
    __slots__ = ("vars", "entries")

    def __init__(self, vars: Sequence[str], entries: Sequence[Sequence[Polynomial]]):
        self.vars: tuple[str, ...] = tuple(vars)
        self.entries: tuple[tuple[Polynomial, ...], ...] = tuple(tuple(row) for row in entries)
        n = len(self.vars)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise DimensionMismatch(f"expected {n}x{n} entries for vars {self.vars}")

    @classmethod
    def identity(cls, vars: Sequence[str]) -> "PolyMatrix":
        n = len(vars)
        return cls(vars, [[ONE_POLY if i == j else ZERO_POLY for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "PolyMatrix":
        n = len(vars)
        return cls(vars, [[ZERO_POLY] * n for _ in range(n)])

    @property
    def dim(self) -> int:
        return len(self.vars)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> PolyVector:
        return tuple(row[j] for row in self.entries)

    def index(self, var: str) -> int:
        return self.vars.index(var)

    def has_infinity(self) -> bool:
        return any(p.has_infinity() for row in self.entries for p in row)

    def infinite_monomials(self) -> list[Monomial]:
        return [mo for row in self.entries for p in row for mo in p.infinite_part()]

    def positions(self) -> set[int]:
        out: set[int] = set()
        for row in self.entries:
            for p in row:
                out |= p.positions()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.vars, self.entries))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_add(self, other)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"PolyMatrix(vars={self.vars!r})"

    def __str__(self) -> str:
        return render_table(self.vars, [[str(p) for p in row] for row in self.entries])

    def to_json(self) -> dict:
        return {"vars": list(self.vars), "entries": [[p.to_json() for p in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "PolyMatrix":
        return cls(data["vars"], [[Polynomial.from_json(p) for p in row] for row in data["entries"]])


def render_table(vars: Sequence[str], cells: Sequence[Sequence[str]]) -> str:
    header = [""] + list(vars)
    rows = [[v] + list(r) for v, r in zip(vars, cells)]
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines)


def _check_same(a: PolyMatrix, b: PolyMatrix) -> None:
    if a.vars != b.vars:
        raise DimensionMismatch(f"variables differ: {a.vars} vs {b.vars}")


def mat_add(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    _check_same(a, b)
    return PolyMatrix(a.vars, [[poly_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)])


def _inf_union(polys) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for p in polys:
        out.extend(p.infinite_part())
    return tuple(out)


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Standard product; ``inf`` anywhere in row i of ``a`` or column j of ``b`` reaches ``(i, j)``."""
    _check_same(a, b)
    n = a.dim
    row_inf = [_inf_union(a.entries[i]) for i in range(n)]
    col_inf = [_inf_union(b.entries[k][j] for k in range(n)) for j in range(n)]
    nonzero_rows = [[k for k in range(n) if a.entries[i][k].monomials] for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            monos: list[Monomial] = list(row_inf[i]) + list(col_inf[j])
            for k in nonzero_rows[i]:
                bkj = b.entries[k][j]
                if bkj.monomials:
                    monos.extend(poly_mul(a.entries[i][k], bkj).monomials)
            row.append(Polynomial(monos) if monos else ZERO_POLY)
        out.append(row)
    return PolyMatrix(a.vars, out)


def mat_star(a: PolyMatrix) -> PolyMatrix:
    """Closure ``1 + A + A^2 + ...`` as the least fixpoint of ``X -> 1 + A X``.

    The iteration is monotone over a finite lattice.  Per assignment it is
    stable after ``2n`` rounds, which bounds the loop even if the canonical
    representation of a stable entry keeps changing shape.
    """
    one = PolyMatrix.identity(a.vars)
    x = one
    for _ in range(2 * a.dim + 4):
        nxt = mat_add(one, mat_mul(a, x))
        if nxt == x:
            break
        x = nxt
    return x


def mat_eval(a: PolyMatrix, assignment: Assignment) -> CoeffMatrix:
    return tuple(tuple(poly_eval(p, assignment) for p in row) for row in a.entries)


def column_replace(a: PolyMatrix, j: int, v: Sequence[Polynomial]) -> PolyMatrix:
    if not 0 <= j < a.dim:
        raise IndexError(f"column {j} out of range for dimension {a.dim}")
    if len(v) != a.dim:
        raise DimensionMismatch(f"vector of length {len(v)} for dimension {a.dim}")
    return PolyMatrix(a.vars, [row[:j] + (v[i],) + row[j + 1 :] for i, row in enumerate(a.entries)])


def with_entries(a: PolyMatrix, updates: dict[tuple[int, int], list[Monomial]]) -> PolyMatrix:
    """Copy of ``a`` with the given monomials added to the given entries."""
    rows = [list(r) for r in a.entries]
    for (i, j), monos in updates.items():
        rows[i][j] = Polynomial(rows[i][j].monomials + tuple(monos))
    return PolyMatrix(a.vars, rows)


# plain coefficient matrices


def cm_identity(n: int) -> CoeffMatrix:
    return tuple(tuple(M if i == j else ZERO for j in range(n)) for i in range(n))


def cm_zero(n: int) -> CoeffMatrix:
    return tuple((ZERO,) * n for _ in range(n))


def cm_add(a: CoeffMatrix, b: CoeffMatrix) -> CoeffMatrix:
    return tuple(tuple(coeff_add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cm_mul(a: CoeffMatrix, b: CoeffMatrix) -> CoeffMatrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for k in range(n):
                acc = coeff_add(acc, coeff_mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def cm_star(a: CoeffMatrix) -> CoeffMatrix:
    one = cm_identity(len(a))
    x = one
    while True:
        nxt = cm_add(one, cm_mul(a, x))
        if nxt == x:
            return x
        x = nxt


def cm_column_replace(a: CoeffMatrix, j: int, v: Sequence[Coeff]) -> CoeffMatrix:
    return tuple(row[:j] + (v[i],) + row[j + 1 :] for i, row in enumerate(a))


def cm_has_infinity(a: CoeffMatrix) -> bool:
    return any(c is INF for row in a for c in row)


def cm_to_json(a: CoeffMatrix) -> list[list[str]]:
    return [[str(c) for c in row] for row in a]


def cm_str(vars: Sequence[str], a: CoeffMatrix) -> str:
    return render_table(vars, [[str(c) for c in row] for row in a])
