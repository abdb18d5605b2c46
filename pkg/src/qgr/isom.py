"""
Window factorization of dominant monomials, the twist exponent ``nu``, the
relations R1-R3 among the generators ``x_{i,k}``, and the bijection ``psi``
between dominant monomials of type ``A_{2n-1}`` and ``B_n``.

A Q-datum cuts the lattice ``I^`` into the translates ``D^k I^_Q``; every
dominant monomial factors uniquely as ``prod_k D^k(m_k)`` with ``m_k``
supported on ``I^_Q``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import cartan_inverse, lie_type
from .qchar import classical_fm, classical_product, et, lt
from .qdata import QDatum, adapted_word
from .weyl import lusztig_transition
from .qtorus import ONE, Monomial, QTElement, TCoeff, Y, frakD, nakajima_leq

__all__ = [
    "QFactorization",
    "qfactorize",
    "nu",
    "verify_facE",
    "FacEReport",
    "generator",
    "verify_presentation",
    "RelationFailure",
    "PresentationReport",
    "psi_pair",
    "psi_fundamental",
    "psi_b",
    "psi_table",
    "psi_window_transition",
    "psi_table_json",
]


def _form(q: QDatum, a, b) -> int:
    """Symmetric form of the simply-laced ``Delta`` on root coordinates."""
    C = q.delta.cartan
    n = len(a)
    return sum(a[x] * C[x][y] * b[y] for x in range(n) if a[x] for y in range(n) if b[y])


# -- factorization ------------------------------------------------------------

@dataclass(frozen=True)
class QFactorization:
    """``m = prod_k D^k(parts[k])`` with each part supported on ``I^_Q``."""

    q: QDatum
    m: Monomial
    parts: tuple  # ((k, m_k), ...), increasing k, trivial parts omitted

    def part(self, k: int) -> Monomial:
        return dict(self.parts).get(k, ONE)

    @property
    def ks(self) -> tuple:
        return tuple(k for k, _ in self.parts)

    def product(self) -> Monomial:
        out = ONE
        for k, mk in self.parts:
            out = out * frakD(self.q.g, mk, k)
        return out

    def __str__(self):
        return " * ".join(f"D^{k}({mk})" for k, mk in self.parts) or "1"


def qfactorize(m, q: QDatum) -> QFactorization:
    if isinstance(m, str):
        m = Monomial.parse(m)
    buckets = {}
    for (i, p), e in m.items():
        _, k = q.phibar(i, p)
        base = frakD(q.g, Y(i, p, e), -k)
        buckets[k] = buckets.get(k, ONE) * base
    parts = tuple(sorted(buckets.items()))
    return QFactorization(q, m, parts)


def nu(m, q: QDatum) -> Fraction:
    """``-1/2 sum_{k<l} (-1)^{k+l} (wt m_k, wt m_l)``."""
    f = qfactorize(m, q)
    wts = [(k, q.wt(mk)) for k, mk in f.parts]
    tot = 0
    for a, (k, wk) in enumerate(wts):
        for l, wl in wts[a + 1:]:
            tot += (-1) ** ((k + l) % 2) * _form(q, wk, wl)
    return Fraction(-tot, 2)


@dataclass
class FacEReport:
    holds: bool
    nu: Fraction
    factorization: QFactorization
    diff: QTElement = None


def verify_facE(m, q: QDatum) -> FacEReport:
    """``E_t(m) = t^nu prod_k D_t^k(E_t(m_k))`` (increasing ``k``)."""
    if isinstance(m, str):
        m = Monomial.parse(m)
    f = qfactorize(m, q)
    v = nu(m, q)
    lhs = et(q.g, m).element
    rhs = lhs.torus.one()
    for k, mk in f.parts:
        rhs = rhs * et(q.g, mk).element.frakD(k)
    rhs = rhs.shift(int(2 * v))
    diff = lhs - rhs
    return FacEReport(not diff.terms, v, f, diff if diff.terms else None)


# -- presentation -------------------------------------------------------------

def _simple(q: QDatum, a: int) -> tuple:
    return tuple(int(x == a) for x in q.delta.vertices)


def generator(q: QDatum, a: int, k: int) -> QTElement:
    """``x_{a,k} = L_t(Y_{i,p})`` with ``(i,p) = phibar^{-1}(alpha_a, k)``."""
    i, p = q.phibar_inverse(_simple(q, a), k)
    return lt(q.g, Y(i, p)).element


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    a: int
    b: int
    k: int
    l: int
    residue: str

    def __str__(self):
        return f"{self.relation} ({self.a},{self.b},{self.k},{self.l}): {self.residue}"


@dataclass
class PresentationReport:
    checked: int
    failures: list

    @property
    def holds(self) -> bool:
        return not self.failures


def _residue(x: QTElement) -> str:
    return "0" if not x.terms else f"{len(x)} terms, e.g. {min(x.terms)}"


def verify_presentation(q: QDatum, ks=(0, 1, 2)) -> PresentationReport:
    """Check R1 (same ``k``), R2 (``l = k+1``) and R3 (``l > k+1``) on the
    generators ``x_{a,k}``, ``k`` in ``ks``."""
    ks = sorted(ks)
    N = q.delta.vertices
    x = {(a, k): generator(q, a, k) for a in N for k in ks}
    one = next(iter(x.values())).torus.one()
    fails = []
    n = 0

    def check(rel, a, b, k, l, resid):
        nonlocal n
        n += 1
        if resid.terms:
            fails.append(RelationFailure(rel, a, b, k, l, _residue(resid)))

    for k in ks:
        for a in N:
            for b in N:
                if a == b:
                    continue
                xa, xb = x[a, k], x[b, k]
                if q.delta.cartan[a - 1][b - 1] == 0:
                    check("R1", a, b, k, k, xa * xb - xb * xa)
                else:
                    s = xa * xb * xa
                    serre = xa * xa * xb - s.shift(2) - s.shift(-2) + xb * xa * xa
                    check("R1", a, b, k, k, serre)
    for k in ks:
        for l in ks:
            if l <= k:
                continue
            for a in N:
                for b in N:
                    ab = _form(q, _simple(q, a), _simple(q, b))
                    lhs = x[a, k] * x[b, l]
                    if l == k + 1:
                        rhs = (x[b, l] * x[a, k]).shift(-2 * ab)
                        if a == b:
                            rhs = rhs + one - one.shift(-4)
                        check("R2", a, b, k, l, lhs - rhs)
                    else:
                        sign = (-1) ** ((k + l) % 2)
                        check("R3", a, b, k, l, lhs - (x[b, l] * x[a, k]).shift(2 * sign * ab))
    return PresentationReport(n, fails)


# -- the type B bijection -------------------------------------------------------

@lru_cache(maxsize=None)
def psi_pair(n: int) -> tuple:
    """The Q-data ``(xi^(1), xi^(2))`` for ``A_{2n-1}`` and ``B_n`` on which
    ``psi`` is tabulated."""
    if n < 2:
        raise ValueError("psi needs n >= 2")
    xi1 = [-a for a in range(1, 2 * n)]
    xi2 = [-2 * a if a < n else (1 - 2 * n if a == n else 2 - 2 * a) for a in range(1, 2 * n)]
    return QDatum(f"A{2 * n - 1}", xi1), QDatum(f"B{n}", xi2)


def _psi_window(a: int, k: int, n: int) -> Monomial:
    """The table on ``(a, -a - 2k)`` in ``I^_{Q^(1)}``."""
    abar = a if a <= n else 2 * n - a
    if a >= n + 1:
        return Y(abar, 2 - 2 * a - 4 * k)
    if a <= n - 1 and k <= n - a - 1:
        return Y(abar, -2 * a - 4 * k)
    if k == n - a:
        return Y(n, -6 * n + 4 * a + 1)
    if 2 <= a and n - a + 1 <= k <= n - 1:
        return Y(n, 2 * n + 3 - 4 * a - 4 * k) * Y(n, -2 * n + 1 - 4 * k)
    if a <= n - 1 and k == n:
        return Y(n, -2 * n + 3 - 4 * a)
    if a <= n - 2 and k >= n + 1:
        return Y(abar, 4 - 2 * a - 4 * k)
    raise ValueError(f"({a}, {-a - 2 * k}) is outside the window")


def psi_fundamental(a: int, p: int, n: int) -> Monomial:
    """``psi(Y_{a,p})``, extended from the window by ``D``-equivariance."""
    q1, q2 = psi_pair(n)
    if not q1.on_lattice(a, p):
        raise ValueError(f"Y[{a},{p}] is off the lattice of {q1.g}")
    _, k = q1.phibar(a, p)
    (a0, p0), = frakD(q1.g, Y(a, p), -k).items()
    a0, p0 = a0[0], a0[1]
    return frakD(q2.g, _psi_window(a0, (-a0 - p0) // 2, n), k)


def _height(g, m: Monomial) -> Fraction:
    """Height of the weight of ``m``; strictly increasing along the
    Nakajima order."""
    Ci = cartan_inverse(g)
    r = len(Ci)
    return sum(e * sum(Fraction(Ci[j][i - 1]) for j in range(r)) for (i, _), e in m.items())


def _top_dominant(g, chi: dict) -> Monomial:
    doms = [M for M, c in chi.items() if c and M.is_dominant()]
    if not doms:
        return None
    top = max(doms, key=lambda M: (_height(g, M), M))
    for M in doms:
        if M != top and not nakajima_leq(g, M, top)[0]:
            raise ArithmeticError(f"{M} is not below {top}")
    return top


def _fund_factors(m: Monomial):
    for (i, p), e in m.items():
        for _ in range(e):
            yield i, p


def psi_b(m, n: int) -> Monomial:
    """``psi(m)`` for a dominant monomial of type ``A_{2n-1}``.

    On fundamental monomials this is the table.  A product is handled through
    ``Psi(L(m)) = L(psi(m))`` at ``t = 1``: ``chi(L(m))`` is split into
    products of fundamental characters, each factor ``Y`` is replaced by
    ``chi(L(psi(Y)))`` and the top dominant monomial of the result is read off.
    """
    if isinstance(m, str):
        m = Monomial.parse(m)
    if not m.is_dominant():
        raise ValueError(f"{m} is not dominant")
    if m.is_one():
        return ONE
    if m.degree() == 1:
        (a, p), = [v for v, _ in m.items()]
        return psi_fundamental(a, p, n)
    return _psi_general(m, n)


@lru_cache(maxsize=None)
def _chi_psi(a: int, p: int, n: int) -> tuple:
    q1, q2 = psi_pair(n)
    return tuple(classical_fm(q2.g, psi_fundamental(a, p, n)).element.items())


@lru_cache(maxsize=None)
def _chi_a(g, a: int, p: int) -> tuple:
    return tuple(classical_fm(g, Y(a, p)).element.items())


@lru_cache(maxsize=256)
def _psi_general(m: Monomial, n: int) -> Monomial:
    q1, q2 = psi_pair(n)
    gA, gB = q1.g, q2.g
    for (a, p), _ in m.items():
        if not q1.on_lattice(a, p):
            raise ValueError(f"Y[{a},{p}] is off the lattice of {gA}")
    rest = dict(lt(gA, m).element.at_one())
    image = {}
    while True:
        M = _top_dominant(gA, rest)
        if M is None:
            break
        c = rest[M]
        A = classical_product(*(dict(_chi_a(gA, a, p)) for a, p in _fund_factors(M)))
        for X, v in A.items():
            w = rest.get(X, 0) - c * v
            if w:
                rest[X] = w
            else:
                rest.pop(X, None)
        B = classical_product(*(dict(_chi_psi(a, p, n)) for a, p in _fund_factors(M)))
        for X, v in B.items():
            w = image.get(X, 0) + c * v
            if w:
                image[X] = w
            else:
                image.pop(X, None)
    if rest:
        raise ArithmeticError(f"chi(L({m})) is not spanned by standard characters")
    top = _top_dominant(gB, image)
    if image.get(top) != 1:
        raise ArithmeticError(f"top monomial {top} of the image has multiplicity {image.get(top)}")
    return top


def psi_window_transition(m, n: int) -> Monomial:
    """``psi`` on monomials supported on ``I^_{Q^(1)}``, computed without the
    table: the exponents of ``m`` are a PBW datum on the adapted word of
    ``Q^(1)``, moved to the adapted word of ``Q^(2)`` by braid moves."""
    if isinstance(m, str):
        m = Monomial.parse(m)
    q1, q2 = psi_pair(n)
    w1, h1 = adapted_word(q1)
    w2, h2 = adapted_word(q2)
    pos = {(a, p): k for k, (a, p) in enumerate(zip(w1, h1))}
    c = [0] * len(w1)
    for v, e in m.items():
        if v not in pos:
            raise ValueError(f"Y[{v[0]},{v[1]}] is outside the window")
        c[pos[v]] = e
    out = ONE
    for v, h, e in zip(w2, h2, lusztig_transition(q1.delta, w1, w2, c)):
        if e:
            out = out * Y(q2.U.bar(v), h, e)
    return out


def psi_table(n: int, ks=(0,)) -> dict:
    """``{(a, p): psi(Y_{a,p})}`` over ``D^k I^_{Q^(1)}``, ``k`` in ``ks``."""
    q1, _ = psi_pair(n)
    out = {}
    for k in ks:
        for (a, p) in sorted(q1.hat_I):
            (v, _), = frakD(q1.g, Y(a, p), k).items()
            out[v] = psi_fundamental(v[0], v[1], n)
    return dict(sorted(out.items()))


def psi_table_json(n: int, ks=(0,)) -> str:
    tab = psi_table(n, ks)
    return json.dumps({
        "n": n,
        "windows": list(ks),
        "psi": {str(Y(a, p)): str(v) for (a, p), v in tab.items()},
    }, indent=1, sort_keys=True)
