"""Index of the choice cylinders that carry an infinite coefficient.

Each stored delta list denotes the set of assignments it matches.  Lists are
kept subsumption-free and closed under fusion: whenever the stored lists
cover every value of some position ``i`` while agreeing elsewhere, the merged
list without position ``i`` is added.  Sibling fusion (lists differing only at
``i``) is the common case; the general merge also combines lists that carry
different extra deltas, which is what makes ``is_complete`` exact.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .polynomial import Assignment, ChoiceDomains, Deltas, _merge_deltas

START = None  # the before-first marker for ``next_assignment``


class DeltaGraph:
    def __init__(self, sizes: Sequence[int] | None = None):
        # ``sizes`` may be a list shared with a choice allocator that keeps growing
        self.sizes: list[int] = sizes if isinstance(sizes, list) else list(sizes or [])
        self.lists: set[Deltas] = set()
        # (position, value) -> stored lists containing that delta
        self._index: dict[tuple[int, int], set[Deltas]] = {}

    @property
    def domains(self) -> ChoiceDomains:
        return ChoiceDomains(tuple(self.sizes))

    def layers(self) -> dict[int, list[Deltas]]:
        out: dict[int, list[Deltas]] = {}
        for d in sorted(self.lists, key=lambda d: (len(d), d)):
            out.setdefault(len(d), []).append(d)
        return out

    def edges(self) -> list[tuple[Deltas, Deltas, int]]:
        """Pairs of stored lists of equal length that differ at exactly one position."""
        out = []
        for layer in self.layers().values():
            for a, b in itertools.combinations(layer, 2):
                diff = [pa for (pa, va), (pb, vb) in zip(a, b) if pa != pb or va != vb]
                if len(diff) == 1 and all(pa == pb for (pa, _), (pb, _) in zip(a, b)):
                    out.append((a, b, diff[0]))
        return out

    def is_complete(self) -> bool:
        return () in self.lists

    def matches(self, assignment: Assignment) -> bool:
        return any(all(assignment[p] == v for p, v in d) for d in self.lists)

    # mutation

    def _subsumed(self, d: Deltas) -> bool:
        if () in self.lists:
            return True
        ds = set(d)
        for x in d:
            for s in self._index.get(x, ()):
                if len(s) <= len(d) and ds.issuperset(s):
                    return True
        return False

    def _remove(self, d: Deltas) -> None:
        self.lists.discard(d)
        for x in d:
            bucket = self._index.get(x)
            if bucket is not None:
                bucket.discard(d)

    def _add(self, d: Deltas) -> None:
        ds = set(d)
        if d:
            supersets = set(self._index.get(d[0], ()))
            for x in d[1:]:
                supersets &= self._index.get(x, set())
        else:
            supersets = set(self.lists)
        for s in supersets:
            if ds <= set(s):
                self._remove(s)
        self.lists.add(d)
        for x in d:
            self._index.setdefault(x, set()).add(d)

    def insert(self, deltas: Iterable[tuple[int, int]]) -> bool:
        """Add a list given as ``(position, value)`` pairs; True if the graph changed."""
        d = tuple(sorted(deltas))
        for (p, v) in d:
            if not 0 <= p < len(self.sizes) or not 0 <= v < self.sizes[p]:
                raise ValueError(f"delta ({v},{p}) outside the choice domains {self.sizes}")
        if self._subsumed(d):
            return False
        work = [d]
        while work:
            cur = work.pop()
            if self._subsumed(cur):
                continue
            self._add(cur)
            work.extend(self._merges_with(cur))
        return True

    def _merges_with(self, d: Deltas) -> list[Deltas]:
        """New lists obtained by fusing ``d`` with stored lists covering the other values of one position."""
        out: list[Deltas] = []
        for pos, val in d:
            size = self.sizes[pos]
            rest = tuple(x for x in d if x[0] != pos)
            groups = []
            for other in range(size):
                if other == val:
                    continue
                bucket = [tuple(x for x in s if x[0] != pos) for s in self._index.get((pos, other), ())]
                if not bucket:
                    break
                groups.append(bucket)
            else:
                for combo in itertools.product(*groups):
                    merged: Deltas | None = rest
                    for part in combo:
                        merged = _merge_deltas(merged, part)
                        if merged is None:
                            break
                    if merged is not None and not self._subsumed(merged):
                        out.append(merged)
        return out

    def fuse(self) -> "DeltaGraph":
        """Re-saturate from scratch (insertion already keeps the graph saturated)."""
        stored = sorted(self.lists, key=lambda d: (len(d), d))
        self.lists.clear()
        self._index.clear()
        for d in stored:
            self.insert(d)
        return self

    # enumeration

    def next_assignment(self, after: Assignment | None = START) -> tuple[int, ...] | None:
        """Least assignment strictly after ``after`` that no stored list matches.

        Odometer order, position 0 most significant.  When a stored list
        matches the candidate, every assignment sharing the candidate's prefix
        up to that list's last position is matched too, so the odometer jumps
        straight past it.
        """
        n = len(self.sizes)
        if () in self.lists:
            return None
        if after is None:
            cand = [0] * n
        else:
            cand = list(after)
            if len(cand) != n:
                raise ValueError(f"assignment has {len(cand)} positions, expected {n}")
            if not _increment(cand, self.sizes, n - 1):
                return None
        while True:
            hit = self._matching(cand)
            if hit is None:
                return tuple(cand)
            if not _increment(cand, self.sizes, hit[-1][0]):
                return None

    def _matching(self, cand: list[int]) -> Deltas | None:
        best = None
        for d in self.lists:
            if all(cand[p] == v for p, v in d):
                # prefer the list whose last position is most significant
                if best is None or d[-1][0] < best[-1][0]:
                    best = d
        return best

    def free_assignments(self) -> Iterator[tuple[int, ...]]:
        a = self.next_assignment(START)
        while a is not None:
            yield a
            a = self.next_assignment(a)

    def to_json(self) -> dict:
        return {
            "domains": list(self.sizes),
            "layers": {str(n): [[[v, p] for p, v in d] for d in ds] for n, ds in self.layers().items()},
        }


def _increment(cand: list[int], sizes: Sequence[int], position: int) -> bool:
    """Odometer step at ``position``: zero the later positions, carry leftwards."""
    for k in range(position + 1, len(cand)):
        cand[k] = 0
    k = position
    while k >= 0:
        cand[k] += 1
        if cand[k] < sizes[k]:
            return True
        cand[k] = 0
        k -= 1
    return False


def dg_insert(g: DeltaGraph, deltas: Iterable[tuple[int, int]]) -> DeltaGraph:
    g.insert(deltas)
    return g


def dg_fusion(g: DeltaGraph) -> DeltaGraph:
    return g.fuse()


def dg_is_complete(g: DeltaGraph) -> bool:
    return g.is_complete()


def dg_next_assignment(g: DeltaGraph, after: Assignment | None = START) -> tuple[int, ...] | None:
    return g.next_assignment(after)
