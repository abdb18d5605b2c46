import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from qgr.isom import (
    nu,
    psi_b,
    psi_fundamental,
    psi_pair,
    psi_table,
    psi_table_json,
    psi_window_transition,
    qfactorize,
    verify_facE,
    verify_presentation,
)
from qgr.qdata import canonical_height
from qgr.qtorus import Monomial, Y, frakD


def window_points(q, ks=(0,)):
    out = []
    for k in ks:
        for i, p in sorted(q.hat_I):
            ((j, s), _), = frakD(q.g, Y(i, p), k).items()
            out.append((j, s))
    return out


def products(points, size):
    for c in itertools.combinations_with_replacement(points, size):
        m = Monomial()
        for v in c:
            m = m * Y(*v)
        yield m


# -- factorization ------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A3", "B2", "G2"]), st.data())
def test_factorization_round_trip(name, data):
    q = canonical_height(0, name)
    pts = window_points(q, (-1, 0, 1, 2))
    m = Monomial({v: data.draw(st.integers(1, 2)) for v in
                  data.draw(st.lists(st.sampled_from(pts), min_size=1, max_size=4, unique=True))})
    f = qfactorize(m, q)
    assert f.product() == m
    for _, mk in f.parts:
        assert all(q.in_window(i, p) for (i, p) in mk)
    assert list(f.ks) == sorted(set(f.ks))


def test_nu_a1():
    q = canonical_height(0, "A1")
    assert str(qfactorize("Y[1,0]Y[1,2]", q)) == "D^0(Y[1,0]) * D^1(Y[1,0])"
    assert nu("Y[1,0]Y[1,2]", q) == 1
    assert nu("Y[1,0]", q) == 0


@pytest.mark.parametrize("name", ["A1", "A3", "B2"])
def test_facE(name):
    q = canonical_height(0, name)
    pts = window_points(q, (0, 1))
    for m in itertools.islice(products(pts, 2), 40):
        rep = verify_facE(m, q)
        assert rep.holds, (m, rep.diff)


# -- presentation -------------------------------------------------------------

@pytest.mark.parametrize("member", [0, 1])
def test_presentation(member):
    q = psi_pair(2)[member]
    rep = verify_presentation(q, (0, 1, 2))
    assert rep.checked > 0
    assert rep.holds, rep.failures[:3]


# -- psi ------------------------------------------------------------------------

def test_psi_pair():
    q1, q2 = psi_pair(2)
    assert q1.xi == (-1, -2, -3)
    assert q2.xi == (-2, -3, -4)
    with pytest.raises(ValueError):
        psi_pair(1)


def test_psi_printed_values():
    assert psi_fundamental(1, -1, 2) == Y(1, -2)
    assert psi_fundamental(2, -2, 2) == Y(2, -3)
    assert psi_fundamental(2, -4, 2) == Y(2, -7) * Y(2, -5)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_psi_table_properties(n):
    q1, q2 = psi_pair(n)
    tab = psi_table(n, (0, 1))
    vals = list(tab.values())
    assert len(set(vals)) == len(vals)
    assert all(v.is_dominant() for v in vals)
    for (a, p), v in tab.items():
        assert q1.wt(Y(a, p)) == q2.wt(v)
    for (a, p), v in psi_table(n, (0,)).items():
        ((b, s), _), = frakD(q1.g, Y(a, p), 1).items()
        assert psi_fundamental(b, s, n) == frakD(q2.g, v, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_psi_transition_agrees_with_table(n):
    for (a, p), v in psi_table(n, (0,)).items():
        assert psi_window_transition(Y(a, p), n) == v


@pytest.mark.parametrize("n", [2, 3])
def test_psi_on_window_products(n):
    q1, q2 = psi_pair(n)
    pts = window_points(q1)
    images = {}
    for m in products(pts, 2):
        v = psi_b(m, n)
        assert v == psi_window_transition(m, n)
        assert v.is_dominant()
        assert q1.wt(m) == q2.wt(v)
        images[m] = v
    assert len(set(images.values())) == len(images)


def test_psi_is_not_multiplicative():
    assert psi_b("Y[1,-3]Y[1,-5]", 2) == Y(1, -6)
    assert psi_b("Y[1,-3]", 2) * psi_b("Y[1,-5]", 2) != Y(1, -6)


def test_psi_json():
    d = json.loads(psi_table_json(2))
    assert d["n"] == 2
    assert d["psi"]["Y[2,-4]"] == "Y[2,-7]Y[2,-5]"


def test_psi_off_lattice():
    with pytest.raises(ValueError):
        psi_fundamental(1, 0, 2)
