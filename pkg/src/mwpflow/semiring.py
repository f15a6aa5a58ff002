"""The five-valued flow semi-ring ``{0, m, w, p, inf}``.

``+`` is max under the total order ``0 < m < w < p < inf``.  ``*`` is max as
well, except that a zero factor annihilates the product unless the other
factor is ``inf``: ``inf * 0 == inf``.  Restricted to ``{0, m, w, p}`` this is
the ordinary (strong) mwp semi-ring.
"""

from __future__ import annotations

from enum import IntEnum
from functools import reduce
from typing import Iterable


class Coeff(IntEnum):
    ZERO = 0
    M = 1
    W = 2
    P = 3
    INF = 4

    def __str__(self) -> str:
        return _SYMBOLS[self]

    def __repr__(self) -> str:
        return f"Coeff.{self.name}"

    def __add__(self, other: "Coeff") -> "Coeff":  # type: ignore[override]
        return coeff_add(self, other)

    def __mul__(self, other: "Coeff") -> "Coeff":  # type: ignore[override]
        return coeff_mul(self, other)

    @classmethod
    def parse(cls, text: str) -> "Coeff":
        try:
            return _BY_SYMBOL[text]
        except KeyError:
            raise ValueError(f"not a flow coefficient: {text!r}") from None


ZERO, M, W, P, INF = Coeff.ZERO, Coeff.M, Coeff.W, Coeff.P, Coeff.INF
ALL: tuple[Coeff, ...] = (ZERO, M, W, P, INF)
FINITE: tuple[Coeff, ...] = (ZERO, M, W, P)

_SYMBOLS = {ZERO: "0", M: "m", W: "w", P: "p", INF: "i"}
_BY_SYMBOL = {v: k for k, v in _SYMBOLS.items()}
_BY_SYMBOL["inf"] = INF
_BY_SYMBOL["∞"] = INF


def coeff_add(a: Coeff, b: Coeff) -> Coeff:
    return a if a >= b else b


def coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    if a is INF or b is INF:
        return INF
    if a is ZERO or b is ZERO:
        return ZERO
    return a if a >= b else b


def coeff_sum(values: Iterable[Coeff]) -> Coeff:
    return reduce(coeff_add, values, ZERO)
