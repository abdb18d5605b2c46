"""Acceptance checks, one per criterion.

Each check prints a single ``PASS``/``FAIL`` line.  Run under pytest, or
directly with ``python tests/test_acceptance.py`` to get just the lines.
"""
import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import TABLE1  # noqa: E402
from qgr.isom import _form, psi_b, psi_fundamental, psi_pair, psi_table, psi_window_transition, verify_presentation  # noqa: E402
from qgr.liealg import lie_type, star, tilde_c  # noqa: E402
from qgr.qchar import classical_fm, ft, kl_table, kr_monomial, lt, verify_tboson, verify_tsystem  # noqa: E402
from qgr.qcluster import random_mutation_check, seed_from_qdatum, verify_kappa  # noqa: E402
from qgr.qdata import canonical_height, random_qdatum, tc_mismatches  # noqa: E402
from qgr.qtorus import Monomial, TCoeff, Y, frakD, nn, quantum_torus, truncate  # noqa: E402
from qgr.weyl import root_system  # noqa: E402

RESULTS = []


def report(k, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {title}" + (f"  [{detail}]" if detail else "")
    print(line)
    RESULTS.append(line)
    return ok


# -- 1 -------------------------------------------------------------------------

def criterion_1():
    bad = []
    for name, expected in TABLE1.items():
        g = lie_type(name)
        if (g.r, g.h_dual, g.ell0) != expected or g.rank * g.rh != 2 * g.ell0:
            bad.append(name)
    return not bad, f"{len(TABLE1)} types" + (f", wrong: {bad}" if bad else "")


# -- 2 -------------------------------------------------------------------------

def _tc_properties(g):
    bad = []
    rh = g.rh
    V = g.vertices
    us = range(-2 * rh, 4 * rh + 1)
    for i in V:
        di = g.di(i)
        for j in V:
            dj = g.di(j)
            c = lambda u, a=i, b=j: tilde_c(g, a, b, u)
            ct = lambda u, a=j, b=i: tilde_c(g, a, b, u)
            cs = lambda u, a=i, b=star(g, j): tilde_c(g, a, b, u)
            if any(c(u) for u in us if u < di) or c(di) != (i == j):
                bad.append((1, i, j))
            for u in us:
                if c(u + di) - c(u - di) != ct(u + dj) - ct(u - dj):
                    bad.append((2, i, j, u))
                if di == dj:
                    rhs = ct(u)
                elif (di, dj) == (1, 2):
                    rhs = ct(u + 1) + ct(u - 1)
                elif (di, dj) == (1, 3):
                    rhs = ct(u + 2) + ct(u) + ct(u - 2)
                else:
                    rhs = None
                if rhs is not None and c(u) != rhs:
                    bad.append((3, i, j, u))
                if u >= 0 and c(u + rh) != -cs(u):
                    bad.append((4, i, j, u))
                if 0 <= u <= rh:
                    if c(rh - u) != cs(u):
                        bad.append((5, i, j, u))
                    if c(u) < 0:
                        bad.append((6, i, j, u))
    return bad


def criterion_2():
    bad = {}
    for name in TABLE1:
        b = _tc_properties(lie_type(name))
        if b:
            bad[name] = b[:3]
    return not bad, f"{len(TABLE1)} types, u in [-2rh, 4rh]" + (f", violations {bad}" if bad else "")


# -- 3 -------------------------------------------------------------------------

def criterion_3():
    rng = random.Random(3)
    bad = []
    for name in ["B2", "B3", "C3", "G2", "F4"]:
        for _ in range(50):
            q = random_qdatum(name, rng)
            if q.tau.order() != q.rh or not (q.tau ** (q.rh // 2)).is_minus_identity():
                bad.append(q)
    return not bad, "50 random Q-data each for B2 B3 C3 G2 F4" + (f", bad {bad[:3]}" if bad else "")


# -- 4 -------------------------------------------------------------------------

def criterion_4():
    rng = random.Random(4)
    bad = {}
    count = 0
    for name in TABLE1:
        for _ in range(3):
            q = random_qdatum(name, rng)
            count += 1
            m = tc_mismatches(q)
            if m:
                bad[repr(q)] = m[:3]
    return not bad, f"{count} Q-data over {len(TABLE1)} types" + (f", mismatches {bad}" if bad else "")


# -- 5 -------------------------------------------------------------------------

def _window(q, k):
    out = []
    for v, p in q.ar_vertices:
        w = v
        for _ in range(abs(k) % 2):
            w = q.vstar(w)
        out.append((w, p + k * q.rh))
    return out


def criterion_5():
    rng = random.Random(5)
    bad = []
    n = 0
    for name in ["A3", "B2", "B3", "C3", "D4", "G2", "F4"]:
        for _ in range(5):
            q = random_qdatum(name, rng)
            n += 1
            R = root_system(q.delta)
            target = {(a, k) for a in R.positive_roots for k in (-1, 0, 1)}
            images = [q.phi(v, p) for k in (-1, 0, 1) for v, p in _window(q, k)]
            if len(images) != len(set(images)) or set(images) != target:
                bad.append((repr(q), "bijection"))
            expected = {(v, p) for v in q.U.vertices
                        for p in range(q.h(q.vstar(v)) - q.rh + 1, q.h(v) + 1) if q.on_lattice(v, p)}
            if set(q.ar_vertices) != expected:
                bad.append((repr(q), "vertex set"))
            for i in q.g.vertices:
                v = q.top_vertex(i)
                for p in range(q.h(v), q.h(v) - 2 * q.rh, -2):
                    rhs = R.to_alpha((q.tau ** ((q.h(v) - p) // 2))(q.gamma_varpi(v)))
                    if q.pi_phibar(i, p) != rhs:
                        bad.append((repr(q), "pi", i, p))
    return not bad, f"{n} Q-data" + (f", bad {bad[:3]}" if bad else "")


# -- 6 -------------------------------------------------------------------------

def criterion_6():
    rng = random.Random(6)
    bad = []
    pairs = 0
    for name in ["A3", "B2", "B3", "G2"]:
        for q in [canonical_height(0, name)] + [random_qdatum(name, rng) for _ in range(2)]:
            g = q.g
            top = max(q.xi)
            pts = [(i, p) for i in g.vertices for p in range(top - 2 * q.rh + 1, top + 1)
                   if (p - q.eps(i)) % 2 == 0]
            for (i, p), (j, s) in itertools.product(pts, pts):
                if p <= s and (i, p) != (j, s):
                    pairs += 1
                    if nn(g, i, p, j, s) != _form(q, q.wt({(i, p): 1}), q.wt({(j, s): 1})):
                        bad.append((name, i, p, j, s))
    return not bad, f"{pairs} pairs" + (f", bad {bad[:3]}" if bad else "")


# -- 7 -------------------------------------------------------------------------

def criterion_7():
    rng = random.Random(7)
    bad = {}
    for name in ["A2", "A3", "B2", "B3", "G2", "D4"]:
        for _ in range(3):
            q = random_qdatum(name, rng)
            b = verify_kappa(q)
            if b:
                bad[repr(q)] = b[:2]
    return not bad, "3 Q-data each for A2 A3 B2 B3 G2 D4" + (f", bad {bad}" if bad else "")


# -- 8 -------------------------------------------------------------------------

def criterion_8():
    bad = []
    count = 0
    for name in ["A1", "A2", "A3", "B2", "B3", "C2", "G2"]:
        g = lie_type(name)
        q = canonical_height(0, name)
        for i in g.vertices:
            p = q.h(q.top_vertex(i))
            F = ft(g, Y(i, p)).element
            count += 1
            checks = [
                F.at_one() == classical_fm(g, Y(i, p)).element,
                F.dominant_monomials() == [Y(i, p)],
                F.antidominant_monomials() == [Y(star(g, i), p + g.rh, -1)],
                all(c.is_nonnegative() for c in F.terms.values()),
                len({q.wt(m) for m in F.terms}) == 1,
            ]
            if not all(checks):
                bad.append((name, i, checks))
    return not bad, f"{count} fundamentals" + (f", bad {bad}" if bad else "")


# -- 9 -------------------------------------------------------------------------

def criterion_9():
    bad = []
    count = 0
    for name in ["A1", "A2", "B2", "G2"]:
        q = canonical_height(0, name)
        for v in q.U.vertices:
            d = q.d(v)
            p = q.h(v) - 6 * d
            for steps in (1, 2, 3):
                r = verify_tsystem(q, v, p, p + 2 * d * steps)
                count += 1
                if not (r.holds and r.y - r.x == 1 and r.y == r.y_formula):
                    bad.append((name, v, steps, r.detail, r.x, r.y, r.y_formula))
    return not bad, f"{count} triples over A1 A2 B2 G2" + (f", bad {bad[:3]}" if bad else "")


# -- 10 ------------------------------------------------------------------------

def criterion_10():
    bad = []
    for name in ["A1", "A2", "B2", "G2"]:
        g = lie_type(name)
        for i in g.vertices:
            for sign in (1, -1):
                ok, _ = verify_tboson(g, i, g.eps(i), sign)
                if not ok:
                    bad.append((name, i, sign))
    T = quantum_torus("A1")
    chain = ft("A1", Y(1, 0)).element * ft("A1", Y(1, 2)).element == \
        lt("A1", Y(1, 0) * Y(1, 2)).element.shift(-2) + T.one()
    P = kl_table("A1", Y(1, 0) * Y(1, 2)) == {Monomial(): TCoeff.t(2)}
    ok = not bad and chain and P
    return ok, f"dual pairs in A1 A2 B2 G2, sl2 chain {chain}, P = t {P}" + (f", bad {bad}" if bad else "")


# -- 11 ------------------------------------------------------------------------

def criterion_11():
    bad = []
    count = nonzero = 0
    for name in ["B2", "G2"]:
        g = lie_type(name)
        q = canonical_height(0, name)
        pts = sorted(q.hat_I)
        for size in (1, 2):
            for c in itertools.combinations_with_replacement(pts, size):
                m = Monomial()
                for v in c:
                    m = m * Y(*v)
                count += 1
                for mp, P in kl_table(g, m).items():
                    nonzero += 1
                    if not (P.is_nonnegative() and min(P.d) >= 1):
                        bad.append((name, str(m), str(mp), str(P)))
    return not bad, f"{count} monomials, {nonzero} nonzero P" + (f", bad {bad[:3]}" if bad else "")


# -- 12 ------------------------------------------------------------------------

def criterion_12():
    details = []
    ok = True
    for q in psi_pair(2):
        r = verify_presentation(q, (0, 1, 2))
        ok = ok and r.holds
        details.append(f"{q.g.name}: {r.checked} relations, {len(r.failures)} failures")
    return ok, "; ".join(details)


# -- 13 ------------------------------------------------------------------------

def criterion_13():
    bad = []
    printed = (psi_fundamental(1, -1, 2) == Y(1, -2)
               and psi_fundamental(2, -2, 2) == Y(2, -3)
               and psi_fundamental(2, -4, 2) == Y(2, -7) * Y(2, -5))
    if not printed:
        bad.append("printed values")
    for n in (2, 3):
        q1, q2 = psi_pair(n)
        tab = psi_table(n, (0, 1))
        vals = list(tab.values())
        if len(set(vals)) != len(vals):
            bad.append((n, "injective"))
        if not all(v.is_dominant() for v in vals):
            bad.append((n, "dominant"))
        if any(q1.wt(Y(a, p)) != q2.wt(v) for (a, p), v in tab.items()):
            bad.append((n, "weight"))
        for (a, p), v in psi_table(n, (0,)).items():
            ((b, s), _), = frakD(q1.g, Y(a, p), 1).items()
            if psi_fundamental(b, s, n) != frakD(q2.g, v, 1):
                bad.append((n, "equivariant", a, p))
        pts = sorted(q1.hat_I)
        images = set()
        prods = 0
        for c in itertools.combinations_with_replacement(pts, 2):
            m = Y(*c[0]) * Y(*c[1])
            v = psi_b(m, n)
            prods += 1
            images.add(v)
            if not v.is_dominant() or q1.wt(m) != q2.wt(v) or v != psi_window_transition(m, n):
                bad.append((n, "product", str(m)))
        if len(images) != prods:
            bad.append((n, "product injectivity"))
    return not bad, "printed values, n = 2, 3 on two windows" + (f", bad {bad[:3]}" if bad else "")


# -- 14 ------------------------------------------------------------------------

def criterion_14():
    rng = random.Random(14)
    bad = []
    for name in ["A2", "A3"]:
        for _ in range(100):
            q = random_qdatum(name, rng)
            ok, seq, msg = random_mutation_check(seed_from_qdatum(q), 20, rng)
            if not ok:
                bad.append((name, seq, msg))
    return not bad, "100 sequences of length 20 each on A2 A3" + (f", bad {bad[:2]}" if bad else "")


# -- 15 ------------------------------------------------------------------------

def criterion_15():
    bad = []
    count = 0
    for name in ["A2", "B2"]:
        q = canonical_height(0, name)
        g = q.g
        for v in q.U.vertices:
            i = q.U.bar(v)
            step = 2 * q.d(v)
            for a in (q.h(v) - 2 * step, q.h(v) - step):
                for steps in (1, 2, 3):
                    b = a + steps * step
                    for left, right in itertools.product((True, False), repeat=2):
                        m = kr_monomial(g, i, a, b, left, right)
                        F = ft(g, m).element if not m.is_one() else quantum_torus(g).one()
                        bound = b if right else b - 1
                        got = truncate(F, bound)
                        count += 1
                        if got.terms != {m: TCoeff(1)}:
                            bad.append((name, v, a, b, left, right))
    return not bad, f"{count} intervals on A2 B2, four variants" + (f", bad {bad[:3]}" if bad else "")


CRITERIA = {
    1: ("Cartan constants and n r h = 2 l0", criterion_1),
    2: ("six c~ properties", criterion_2),
    3: ("tau order and tau^(rh/2) = -1", criterion_3),
    4: ("c~ difference equals tau pairing", criterion_4),
    5: ("phi bijection, vertex set, pi of phibar", criterion_5),
    6: ("N equals Q-weight pairing", criterion_6),
    7: ("kappa equals Lambda", criterion_7),
    8: ("fundamental F_t", criterion_8),
    9: ("quantum T-systems", criterion_9),
    10: ("dual pairs and the sl2 chain", criterion_10),
    11: ("KL positivity", criterion_11),
    12: ("presentation relations R1-R3", criterion_12),
    13: ("psi for type B", criterion_13),
    14: ("quantum cluster mutation", criterion_14),
    15: ("truncation of KR characters", criterion_15),
}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    title, fn = CRITERIA[k]
    t0 = time.perf_counter()
    ok, detail = fn()
    assert report(k, title, ok, f"{detail}; {time.perf_counter() - t0:.1f}s"), RESULTS[-1]


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        title, fn = CRITERIA[k]
        t0 = time.perf_counter()
        ok, detail = fn()
        failed += not report(k, title, ok, f"{detail}; {time.perf_counter() - t0:.1f}s")
    sys.exit(1 if failed else 0)
