"""
Quantum seeds and mutation, the seed attached to a Q-datum, and the torus
map ``X_alpha -> underline(m^{(v)}[p, xi_v])``.

Quantum-torus elements on the cluster side are dicts ``{exponent tuple:
TCoeff}`` with ``X^a X^b = v^{Lambda(a,b)/2} X^{a+b}``; ``v`` plays the role
of ``t`` and coefficients reuse :class:`~qgr.qtorus.TCoeff`.
"""
from __future__ import annotations

import json
from fractions import Fraction
import random as _random
from dataclasses import dataclass, field

from .qchar import ft, kr_monomial
from .qdata import QDatum, adapted_word
from .qtorus import QTElement, TCoeff, truncate
from .weyl import CompatiblePair, gls_pair

__all__ = [
    "QuantumSeed",
    "mutate",
    "seed_from_word",
    "seed_from_qdatum",
    "torus_mul",
    "random_mutation_check",
    "phiT",
    "kappa",
    "verify_kappa",
    "verify_det_vs_tsystem",
    "DetReport",
    "in_S_Q",
]


def torus_mul(Lam, x: dict, y: dict) -> dict:
    """Product in the quantum torus ``T(Lambda)``."""
    n = len(Lam)
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            e = sum(a[i] * Lam[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])
            c = (ca * cb).shift(e)
            k = tuple(u + w for u, w in zip(a, b))
            s = out.get(k, TCoeff()) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _mono(a, c=None) -> dict:
    return {tuple(a): c if c is not None else TCoeff(1)}


@dataclass(frozen=True)
class QuantumSeed:
    """A compatible pair together with its cluster variables.

    ``variables[j]`` is ``None`` for an initial variable; a mutated variable
    is recorded as ``(a', a'')``, meaning ``X^{a'} + X^{a''}`` in the torus
    of the seed it was mutated from (whose pair is ``parent``).
    """

    pair: CompatiblePair
    variables: tuple = None
    parent: "QuantumSeed" = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.variables is None:
            object.__setattr__(self, "variables", (None,) * len(self.pair.J))

    @property
    def n(self) -> int:
        return len(self.pair.J)

    def index(self, k) -> int:
        return self.pair.J.index(k)

    def to_json(self) -> str:
        return json.dumps({
            "J": list(self.pair.J),
            "J_e": list(self.pair.J_e),
            "Lambda": [list(r) for r in self.pair.Lambda],
            "Btilde": [list(r) for r in self.pair.Btilde],
            "variables": [None if v is None else [list(v[0]), list(v[1])] for v in self.variables],
        }, sort_keys=True)


def seed_from_word(g, word) -> QuantumSeed:
    return QuantumSeed(gls_pair(g, word))


def seed_from_qdatum(q: QDatum) -> QuantumSeed:
    word, _ = adapted_word(q)
    return QuantumSeed(gls_pair(q.delta, word))


def _exchange_vectors(pair: CompatiblePair, k):
    n = len(pair.J)
    col = [pair.b(s, k) for s in pair.J]
    kk = pair.J.index(k)
    a1 = [max(0, c) for c in col]
    a2 = [max(0, -c) for c in col]
    a1[kk] = a2[kk] = -1
    return tuple(a1), tuple(a2)


def mutate(seed: QuantumSeed, k) -> QuantumSeed:
    """Mutation in the exchangeable direction ``k``."""
    P = seed.pair
    if k not in P.J_e:
        raise ValueError(f"{k} is not exchangeable")
    J, Je = P.J, P.J_e
    n, m = len(J), len(Je)
    kk, ke = J.index(k), Je.index(k)
    E = [[int(a == b) for b in range(n)] for a in range(n)]
    for a in range(n):
        E[a][kk] = max(0, -P.Btilde[a][ke]) if a != kk else -1
    F = [[int(a == b) for b in range(m)] for a in range(m)]
    for b in range(m):
        F[ke][b] = max(0, P.Btilde[kk][b]) if b != ke else -1
    L = P.Lambda
    Lp = [[sum(E[x][a] * L[x][y] * E[y][b] for x in range(n) for y in range(n))
           for b in range(n)] for a in range(n)]
    EB = [[sum(E[a][x] * P.Btilde[x][b] for x in range(n)) for b in range(m)] for a in range(n)]
    Bp = [[sum(EB[a][x] * F[x][b] for x in range(m)) for b in range(m)] for a in range(n)]
    new = CompatiblePair(J, Je, tuple(map(tuple, Lp)), tuple(map(tuple, Bp)), P.d)
    vars_ = list(seed.variables)
    vars_[kk] = _exchange_vectors(P, k)
    return QuantumSeed(new, tuple(vars_), seed)


def _involution_holds(seed: QuantumSeed, k) -> bool:
    """``mu_k mu_k`` returns ``X_k``: checks ``X''_k X'_k = X_k X'_k`` in the
    torus of ``seed``, using that the mutated ``Lambda`` agrees with the old
    one away from ``k``."""
    s1 = mutate(seed, k)
    s2 = mutate(s1, k)
    if s2.pair != seed.pair:
        return False
    L0, L1 = seed.pair.Lambda, s1.pair.Lambda
    kk = seed.index(k)
    ek = tuple(int(a == kk) for a in range(seed.n))
    a1, a2 = s1.variables[kk]
    b1, b2 = s2.variables[kk]
    # left side: (X'^{b1} + X'^{b2}) X'_k in T(Lambda'); exponents at k cancel
    lhs = {}
    for b in (b1, b2):
        lhs = _add(lhs, torus_mul(L1, _mono(b), _mono(ek)))
    if any(key[kk] for key in lhs):
        return False
    rhs = torus_mul(L0, _mono(ek), _add(_mono(a1), _mono(a2)))
    return lhs == rhs


def _add(x, y):
    out = dict(x)
    for k, c in y.items():
        s = out.get(k, TCoeff()) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def random_mutation_check(seed: QuantumSeed, length: int = 20, rng=None) -> tuple:
    """Mutate along a random sequence, checking compatibility, skewness and
    involutivity at every step.  Returns ``(ok, sequence, message)``."""
    rng = rng or _random.Random()
    seq = []
    cur = seed
    for _ in range(length):
        k = rng.choice(cur.pair.J_e)
        seq.append(k)
        if not _involution_holds(cur, k):
            return False, seq, f"mutation at {k} is not involutive"
        cur = mutate(cur, k)
        if not cur.pair.is_compatible():
            return False, seq, "pair lost compatibility"
        if not cur.pair.is_skew() or not cur.pair.principal_skew():
            return False, seq, "lost skew-symmetry"
    return True, seq, ""


# -- the torus map ----------------------------------------------------------

def _kr_top(q: QDatum, v: int, p: int):
    return kr_monomial(q.g, q.U.bar(v), p, q.h(v))


def phiT(q: QDatum) -> dict:
    """``alpha -> underline(m^{(v)}[p, xi_v])`` with ``(v,p) = phi^{-1}(alpha, 0)``,
    keyed by positive roots in simple-root coordinates."""
    from .qchar import torus_for
    out = {}
    for v, p in q.ar_vertices:
        alpha, _ = q.phi(v, p)
        m = _kr_top(q, v, p)
        out[alpha] = torus_for(q.g, m).monomial(m)
    return out


def kappa(q: QDatum, v: int, p: int, w: int, s: int) -> int:
    from .qchar import torus_for
    a, b = _kr_top(q, v, p), _kr_top(q, w, s)
    return torus_for(q.g, a).N(a, b)


def verify_kappa(q: QDatum) -> list:
    """Pairs ``(alpha, beta, kappa, Lambda)`` where the two disagree."""
    word, heights = adapted_word(q)
    pair = gls_pair(q.delta, word)
    pos = {}
    for s, (v, h) in enumerate(zip(word, heights), start=1):
        pos[v, h] = s
    bad = []
    verts = q.ar_vertices
    for v, p in verts:
        for w, s in verts:
            k = kappa(q, v, p, w, s)
            lam = pair.lam(pos[v, p], pos[w, s])
            if k != lam:
                bad.append((q.phi(v, p)[0], q.phi(w, s)[0], k, lam))
    return bad


@dataclass
class DetReport:
    holds: bool
    a: object = None
    b: object = None
    detail: str = ""


def _F_trunc(q: QDatum, v: int, a: int, b: int) -> QTElement:
    """``F_t^{(v)}[a, b)_{<= xi}`` (the unit when ``a = b``)."""
    from .qchar import torus_for
    m = kr_monomial(q.g, q.U.bar(v), a, b, True, False) if a < b else None
    if m is None or m.is_one():
        from .qtorus import quantum_torus
        return quantum_torus(q.g, q.parity).one()
    return truncate(ft(q.g, m).element, q)


def _next_on_lattice(q: QDatum, v: int, p: int) -> int:
    x = p + 1
    while not q.on_lattice(v, x):
        x += 1
    return x


def in_S_Q(q: QDatum, v: int, p: int, s: int) -> bool:
    return (q.on_lattice(v, p) and q.on_lattice(v, s)
            and q.h(q.vstar(v)) - q.rh < p <= s <= q.h(v) + 2 * q.d(v))


def verify_det_vs_tsystem(q: QDatum, v: int, p: int, s: int) -> DetReport:
    """Check the truncated exchange relation

        D(v;p,s) D(v;p+,s+) = t^a D(v;p,s+) D(v;p+,s) + t^b prod_{w ~ v} D(w; p+(w), s+(w))

    with ``D(v;p,s) = F_t^{(v)}[p,s)_{<= xi}``; ``p < s <= xi_v``."""
    if not in_S_Q(q, v, p, s):
        raise ValueError(f"({v};{p},{s}) is outside S_Q")
    if not p < s <= q.h(v):
        raise ValueError("the exchange relation needs p < s <= xi_v")
    d = q.d(v)
    pp, sp = p + 2 * d, s + 2 * d
    lhs = _F_trunc(q, v, p, s) * _F_trunc(q, v, pp, sp)
    first = _F_trunc(q, v, p, sp) * _F_trunc(q, v, pp, s)
    prod = None
    for w in sorted(q.U.neighbours(v)):
        f = _F_trunc(q, w, _next_on_lattice(q, w, p), _next_on_lattice(q, w, s))
        prod = f if prod is None else prod * f
    # leading monomial: the product of the two KR tops
    lead = kr_monomial(q.g, q.U.bar(v), p, s, True, False) * kr_monomial(q.g, q.U.bar(v), pp, sp, True, False)
    ca, cb = lhs.coeff(lead), first.coeff(lead)
    if len(ca.d) != 1 or len(cb.d) != 1 or list(ca.d.values()) != list(cb.d.values()):
        return DetReport(False, detail=f"leading coefficients {ca} and {cb} at {lead}")
    a2 = next(iter(ca.d)) - next(iter(cb.d))
    rest = lhs - first.shift(a2)
    if not rest.terms:
        return DetReport(False, Fraction(a2, 2), detail="no second term")
    m0 = next(iter(prod.terms)) if len(prod.terms) == 1 else max(prod.terms, key=lambda m: m.degree())
    c0, cp = rest.coeff(m0), prod.coeff(m0)
    if len(c0.d) != 1 or len(cp.d) != 1:
        return DetReport(False, Fraction(a2, 2), detail=f"coefficient {c0} at {m0}")
    b2 = next(iter(c0.d)) - next(iter(cp.d))
    diff = rest - prod.shift(b2)
    if diff.terms:
        return DetReport(False, Fraction(a2, 2), Fraction(b2, 2), detail=f"mismatch at {min(diff.terms)}")
    return DetReport(True, Fraction(a2, 2), Fraction(b2, 2))
