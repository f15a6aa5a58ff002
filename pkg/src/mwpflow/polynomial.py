"""Functions from choice assignments to flow coefficients, as sums of delta monomials.

A delta ``δ(i, j)`` is the indicator that choice position ``j`` takes value
``i``; a monomial is a coefficient times a product of deltas, i.e. a constant
function on a cylinder set of assignments; a polynomial is the pointwise max of
its monomials.  Internally a delta is stored as the pair ``(position, value)``
so that tuples of deltas sort by position first.

Polynomials are kept canonical: monomials sorted by their delta lists, and no
monomial subsumed by another one (fewer deltas and a scalar at least as large).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .semiring import INF, M, ZERO, Coeff, coeff_mul

Deltas = tuple[tuple[int, int], ...]
Assignment = Sequence[int]

DEFAULT_ENUMERATION_CAP = 1 << 20


class DomainTooLarge(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class ChoiceDomains:
    """Cardinality of each choice position, positions numbered ``0..p-1``."""

    sizes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"choice domains must be non-empty: {self.sizes}")

    def __len__(self) -> int:
        return len(self.sizes)

    def __getitem__(self, position: int) -> int:
        return self.sizes[position]

    def space_size(self) -> int:
        n = 1
        for s in self.sizes:
            n *= s
        return n

    def assignments(self, cap: int | None = DEFAULT_ENUMERATION_CAP) -> Iterator[tuple[int, ...]]:
        """All assignments in odometer order, position 0 most significant."""
        if cap is not None and self.space_size() > cap:
            raise DomainTooLarge(f"{self.space_size()} assignments exceed cap {cap}")
        return itertools.product(*(range(s) for s in self.sizes))

    def check(self, assignment: Assignment) -> None:
        if len(assignment) != len(self.sizes):
            raise ValueError(f"assignment has {len(assignment)} positions, expected {len(self.sizes)}")
        for pos, (v, s) in enumerate(zip(assignment, self.sizes)):
            if not 0 <= v < s:
                raise ValueError(f"value {v} out of range at position {pos} (size {s})")


class Monomial:
    """``scalar * δ(v0, p0) * δ(v1, p1) ...`` with strictly increasing positions."""

    __slots__ = ("scalar", "deltas", "_dset")

    def __init__(self, scalar: Coeff, deltas: Iterable[tuple[int, int]] = ()):
        ds = tuple(sorted(deltas))
        for (p0, v0), (p1, v1) in zip(ds, ds[1:]):
            if p0 == p1:
                raise ValueError(f"two deltas at position {p0}")
        self.scalar = Coeff(scalar)
        self.deltas: Deltas = ds
        self._dset = frozenset(ds)

    @classmethod
    def _make(cls, scalar: Coeff, deltas: Deltas) -> "Monomial":
        # trusted constructor: deltas already sorted and consistent
        obj = cls.__new__(cls)
        obj.scalar = scalar
        obj.deltas = deltas
        obj._dset = frozenset(deltas)
        return obj

    @property
    def key(self) -> tuple[Deltas, int]:
        return (self.deltas, -int(self.scalar))

    def matches(self, assignment: Assignment) -> bool:
        return all(assignment[pos] == val for pos, val in self.deltas)

    def positions(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.deltas)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.scalar == other.scalar and self.deltas == other.deltas

    def __hash__(self) -> int:
        return hash((self.scalar, self.deltas))

    def __lt__(self, other: "Monomial") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        return str(self.scalar) + "".join(f"δ({v},{p})" for p, v in self.deltas)

    def to_json(self) -> dict:
        return {"scalar": str(self.scalar), "deltas": [[v, p] for p, v in self.deltas]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Monomial":
        return cls(Coeff.parse(data["scalar"]), ((p, v) for v, p in data["deltas"]))


def delta(value: int, position: int, scalar: Coeff = M) -> Monomial:
    """The monomial ``scalar * δ(value, position)``."""
    return Monomial._make(Coeff(scalar), ((position, value),))


def _merge_deltas(a: Deltas, b: Deltas) -> Deltas | None:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        pa, va = a[i]
        pb, vb = b[j]
        if pa < pb:
            out.append(a[i])
            i += 1
        elif pb < pa:
            out.append(b[j])
            j += 1
        else:
            if va != vb:
                return None
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_product(x: Monomial, y: Monomial) -> Monomial | None:
    """Product of two monomials, or ``None`` for the everywhere-zero function."""
    scalar = coeff_mul(x.scalar, y.scalar)
    if scalar is ZERO:
        return None
    deltas = _merge_deltas(x.deltas, y.deltas)
    if deltas is None:
        return None
    return Monomial._make(scalar, deltas)


def mono_subsumes(general: Monomial, specific: Monomial) -> bool:
    """True when ``general`` dominates ``specific`` at every assignment it matches."""
    return general.scalar >= specific.scalar and general._dset <= specific._dset


def canonical_monomials(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    best: dict[Deltas, Monomial] = {}
    for mono in monos:
        if mono is None or mono.scalar is ZERO:
            continue
        old = best.get(mono.deltas)
        if old is None or mono.scalar > old.scalar:
            best[mono.deltas] = mono
    if len(best) <= 1:
        return tuple(best.values())
    candidates = sorted(best.values(), key=lambda mo: (len(mo.deltas), -mo.scalar))
    kept: list[Monomial] = []
    for cand in candidates:
        if not any(mono_subsumes(g, cand) for g in kept):
            kept.append(cand)
    kept.sort(key=lambda mo: mo.deltas)
    return tuple(kept)


class Polynomial:
    """An immutable canonical polynomial; the empty one is the constant zero."""

    __slots__ = ("monomials",)

    def __init__(self, monomials: Iterable[Monomial] = ()):
        self.monomials: tuple[Monomial, ...] = canonical_monomials(monomials)

    @classmethod
    def _trusted(cls, monomials: tuple[Monomial, ...]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.monomials = monomials
        return obj

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        c = Coeff(c)
        if c is ZERO:
            return ZERO_POLY
        return cls._trusted((Monomial._make(c, ()),))

    def is_zero(self) -> bool:
        return not self.monomials

    def constant_value(self) -> Coeff | None:
        """The coefficient if this polynomial is delta-free, else ``None``."""
        if not self.monomials:
            return ZERO
        if len(self.monomials) == 1 and not self.monomials[0].deltas:
            return self.monomials[0].scalar
        return None

    def infinite_part(self) -> tuple[Monomial, ...]:
        return tuple(mo for mo in self.monomials if mo.scalar is INF)

    def has_infinity(self) -> bool:
        return any(mo.scalar is INF for mo in self.monomials)

    def positions(self) -> set[int]:
        return {pos for mo in self.monomials for pos, _ in mo.deltas}

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(self.monomials)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __call__(self, assignment: Assignment) -> Coeff:
        return poly_eval(self, assignment)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(str(mo) for mo in self.monomials)

    def to_json(self) -> list:
        return [mo.to_json() for mo in self.monomials]

    @classmethod
    def from_json(cls, data: Sequence) -> "Polynomial":
        return cls(Monomial.from_json(d) for d in data)


ZERO_POLY = Polynomial._trusted(())
ONE_POLY = Polynomial._trusted((Monomial._make(M, ()),))

PolyLike = Union[Polynomial, Coeff]


def as_poly(x: PolyLike) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial.const(x)


def poly_add(x: Polynomial, y: Polynomial) -> Polynomial:
    if not y.monomials:
        return x
    if not x.monomials:
        return y
    if x is y:
        return x
    return Polynomial(x.monomials + y.monomials)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    monos: list[Monomial] = []
    for p in polys:
        monos.extend(p.monomials)
    return Polynomial(monos)


def poly_mul(x: Polynomial, y: Polynomial) -> Polynomial:
    """Pointwise product, by ordered merge of the partial products ``x * y_i``.

    Infinite monomials of either factor survive unconditionally: the product
    at an assignment where one side is ``inf`` is ``inf`` even if the other
    side is zero there.
    """
    if not x.monomials or not y.monomials:
        carried = x.infinite_part() + y.infinite_part()
        return Polynomial._trusted(canonical_monomials(carried)) if carried else ZERO_POLY
    cx, cy = x.constant_value(), y.constant_value()
    if cy is M:
        return x
    if cx is M:
        return y

    # one ordered partial product per monomial of y
    partials: list[list[Monomial]] = []
    for ym in y.monomials:
        prods = [pr for xm in x.monomials if (pr := mono_product(xm, ym)) is not None]
        if prods:
            prods.sort(key=lambda mo: mo.key)
            partials.append(prods)
    # frontier of current heads; repeatedly move the least head to the result
    frontier = [(p[0].key, i, 0) for i, p in enumerate(partials)]
    heapq.heapify(frontier)
    merged: list[Monomial] = []
    while frontier:
        _, i, k = heapq.heappop(frontier)
        merged.append(partials[i][k])
        if k + 1 < len(partials[i]):
            heapq.heappush(frontier, (partials[i][k + 1].key, i, k + 1))
    merged.extend(x.infinite_part())
    merged.extend(y.infinite_part())
    return Polynomial(merged)


def poly_eval(x: Polynomial, assignment: Assignment) -> Coeff:
    value = ZERO
    for mo in x.monomials:
        if mo.scalar > value and mo.matches(assignment):
            value = mo.scalar
    return value


def poly_equiv(
    x: Polynomial,
    y: Polynomial,
    domains: ChoiceDomains,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Semantic equality, by evaluation at every assignment of ``domains``."""
    return all(poly_eval(x, a) == poly_eval(y, a) for a in domains.assignments(cap))


def scale(c: Coeff, x: Polynomial) -> Polynomial:
    return poly_mul(Polynomial.const(c), x)
