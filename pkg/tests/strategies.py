"""Hypothesis strategies for coefficients, polynomials and matrices."""

from __future__ import annotations

from hypothesis import strategies as st

from mwpflow.matrix import PolyMatrix
from mwpflow.polynomial import ChoiceDomains, Monomial, Polynomial
from mwpflow.semiring import ALL, FINITE, M, P, W, INF

NONZERO = (M, W, P, INF)
DOMAINS = ChoiceDomains((3, 3, 2, 3))


def monomials(domains: ChoiceDomains = DOMAINS, scalars=NONZERO):
    def build(scalar, picks):
        return Monomial(scalar, [(pos, v % domains[pos]) for pos, v in picks.items()])

    return st.builds(
        build,
        st.sampled_from(scalars),
        st.dictionaries(st.integers(0, len(domains) - 1), st.integers(0, 2), max_size=len(domains)),
    )


def raw_monomial_lists(domains: ChoiceDomains = DOMAINS, max_size: int = 8, scalars=NONZERO):
    return st.lists(monomials(domains, scalars), max_size=max_size)


def polynomials(domains: ChoiceDomains = DOMAINS, max_size: int = 8, scalars=NONZERO):
    return raw_monomial_lists(domains, max_size, scalars).map(Polynomial)


def finite_polynomials(domains: ChoiceDomains = DOMAINS, max_size: int = 6):
    return polynomials(domains, max_size, scalars=(M, W, P))


def matrices(n: int = 3, domains: ChoiceDomains = DOMAINS, max_size: int = 3, finite: bool = False):
    polys = finite_polynomials(domains, max_size) if finite else polynomials(domains, max_size)
    names = [f"X{i}" for i in range(1, n + 1)]
    return st.lists(st.lists(polys, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda rows: PolyMatrix(names, rows)
    )


coeffs = st.sampled_from(ALL)
finite_coeffs = st.sampled_from(FINITE)
