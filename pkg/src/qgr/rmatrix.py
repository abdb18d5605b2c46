"""
Denominators of normalized R-matrices between fundamental modules and the
resulting ``dd`` invariant (order of the zero at ``z = 1``).

The denominator of ``L(Y_{i,0})`` against ``L(Y_{j,0})`` is read off the
inverse quantum Cartan matrix:

    d_{i,j}(z) = prod_{u=0}^{r h^vee} (z - q^{u + d_i})^{c~_ij(u)}     (d_i >= d_j)

This is exact except when ``d_i = d_j = 1 < r``, where it is only known to
be divisible by the true denominator; results carry an ``exact`` flag.
"""
from __future__ import annotations

from dataclasses import dataclass

from .liealg import lie_type, star, tilde_c

__all__ = [
    "Denominator",
    "denominator_fund",
    "dd_fund",
    "commute_fund",
    "is_exact",
    "wt_pairing_from_dd",
]


@dataclass(frozen=True)
class Denominator:
    """``roots`` maps ``e`` to the multiplicity of ``(z - q^e)``."""

    i: int
    j: int
    roots: tuple
    exact: bool

    def multiplicity(self, e: int) -> int:
        return dict(self.roots).get(e, 0)

    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def __str__(self):
        return " ".join(f"(z-q^{e})" + (f"^{m}" if m > 1 else "") for e, m in self.roots) or "1"


def is_exact(g, i: int, j: int) -> bool:
    g = lie_type(g)
    return not (g.di(i) == g.di(j) == 1 < g.r)


def denominator_fund(g, i: int, j: int) -> Denominator:
    g = lie_type(g)
    a, b = (i, j) if g.di(i) >= g.di(j) else (j, i)
    roots = []
    for u in range(0, g.rh + 1):
        c = tilde_c(g, a, b, u)
        if c < 0:
            raise ArithmeticError(f"negative multiplicity c~_{a}{b}({u}) = {c}")
        if c:
            roots.append((u + g.di(a), c))
    return Denominator(i, j, tuple(roots), is_exact(g, i, j))


def dd_fund(g, i: int, p: int, j: int, s: int) -> int:
    """``dd(L(Y_{i,p}), L(Y_{j,s}))``; an upper bound when not exact."""
    g = lie_type(g)
    x = abs(p - s)
    if x > g.rh:
        return 0
    a, b = (i, j) if g.di(i) >= g.di(j) else (j, i)
    return tilde_c(g, a, b, x - g.di(a))


def commute_fund(g, i: int, p: int, j: int, s: int, strict: bool = False) -> bool:
    """Whether ``L(Y_{i,p})`` and ``L(Y_{j,s})`` commute (``dd = 0``).

    A positive bound in the inexact case is reported as non-commuting;
    pass ``strict=True`` to get a ``ValueError`` there instead.
    """
    v = dd_fund(g, i, p, j, s)
    if v and strict and not is_exact(g, i, j):
        raise ValueError(f"dd({i},{p};{j},{s}) is only bounded by {v}")
    return v == 0


def wt_pairing_from_dd(g, i: int, p: int, j: int, s: int) -> int:
    """``sum_k (-1)^k dd(Y_{i,p}, D^{k+1} Y_{j,s})`` with
    ``D^k(j,s) = (j^{k*}, s + k r h^vee)``."""
    g = lie_type(g)
    tot = 0
    lo = (p - s) // g.rh - 3
    hi = (p - s) // g.rh + 3
    for k in range(lo, hi + 1):
        e = k + 1
        jj = star(g, j) if e % 2 else j
        tot += (-1) ** (k % 2) * dd_fund(g, i, p, jj, s + e * g.rh)
    return tot
