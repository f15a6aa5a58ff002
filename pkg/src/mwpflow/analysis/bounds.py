from __future__ import annotations

from typing import Sequence

from ..semiring import INF, M, P, W, Coeff


class UnboundedVector(ValueError):
    pass


def render_bound(v: Sequence[Coeff], vars: Sequence[str]) -> str:
    """Bound shape ``max(x, p1(y)) + p2(z)`` read off a dependency column."""
    if any(c is INF for c in v):
        raise UnboundedVector("an infinite coefficient has no polynomial bound")
    ms = [x for x, c in zip(vars, v) if c is M]
    ws = [x for x, c in zip(vars, v) if c is W]
    ps = [x for x, c in zip(vars, v) if c is P]
    inner = list(ms)
    if ws:
        inner.append(f"p1({', '.join(ws)})")
    parts = []
    if inner:
        parts.append(inner[0] if ws and not ms else f"max({', '.join(inner)})")
    if ps:
        parts.append(f"p2({', '.join(ps)})")
    return " + ".join(parts) if parts else "0"
