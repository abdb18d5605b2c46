import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from qgr.qcluster import (
    in_S_Q,
    kappa,
    mutate,
    phiT,
    random_mutation_check,
    seed_from_qdatum,
    seed_from_word,
    verify_det_vs_tsystem,
    verify_kappa,
)
from qgr.qdata import canonical_height, random_qdatum
from qgr.weyl import gls_pair

from oracles import fz_mutation


def fz_reference(pair, k):
    """Mutated exchange matrix by the Fomin-Zelevinsky rule, with rows
    indexed by ``J`` and columns by ``J_e``."""
    rk, ck = pair.J.index(k), pair.J_e.index(k)
    rows = [pair.J.index(s) for s in pair.J_e]
    others = [r for r in range(len(pair.J)) if r not in rows]
    order = rows + others
    B = [list(pair.Btilde[r]) for r in order]
    M = fz_mutation(B, ck, len(pair.J_e))
    out = [None] * len(pair.J)
    for new, r in enumerate(order):
        out[r] = tuple(M[new])
    return tuple(out)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2", "B3", "G2"]), st.integers(0, 10**6), st.data())
def test_mutation_matches_fz(name, seed, data):
    q = random_qdatum(name, random.Random(seed))
    s = seed_from_qdatum(q)
    for _ in range(4):
        k = data.draw(st.sampled_from(s.pair.J_e))
        expected = fz_reference(s.pair, k)
        s = mutate(s, k)
        assert s.pair.Btilde == expected
        assert s.pair.is_compatible()


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_random_sequences(name):
    rng = random.Random(2024)
    for _ in range(20):
        q = random_qdatum(name, rng)
        ok, seq, msg = random_mutation_check(seed_from_qdatum(q), 20, rng)
        assert ok, (seq, msg)


def test_mutation_is_involutive():
    s = seed_from_word("A3", (1, 2, 1, 3, 2, 1))
    for k in s.pair.J_e:
        assert mutate(mutate(s, k), k).pair == s.pair


def test_frozen_direction_rejected():
    s = seed_from_word("A2", (1, 2, 1))
    frozen = s.pair.J_f[0]
    with pytest.raises(ValueError):
        mutate(s, frozen)


def test_seed_json():
    s = mutate(seed_from_word("A2", (1, 2, 1)), 1)
    d = json.loads(s.to_json())
    assert d["J"] == [1, 2, 3]
    assert d["variables"][0] is not None


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2", "D4"])
def test_kappa_equals_lambda(name):
    rng = random.Random(7)
    for _ in range(3):
        assert verify_kappa(random_qdatum(name, rng)) == []


def test_phiT_keys_are_positive_roots():
    q = canonical_height(0, "B2")
    T = phiT(q)
    assert len(T) == len(q.ar_vertices)
    assert all(len(a) == q.delta.rank for a in T)


def test_kappa_is_skew():
    q = canonical_height(0, "A3")
    V = q.ar_vertices
    for v, p in V:
        for w, s in V:
            assert kappa(q, v, p, w, s) == -kappa(q, w, s, v, p)


def S_Q(q):
    out = []
    for v in q.U.vertices:
        for p in range(q.h(q.vstar(v)) - q.rh + 1, q.h(v) + 1):
            for s in range(p + 1, q.h(v) + 1):
                if in_S_Q(q, v, p, s):
                    out.append((v, p, s))
    return out


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_det_vs_tsystem(name):
    q = canonical_height(0, name)
    cases = S_Q(q)
    assert cases
    for v, p, s in cases:
        rep = verify_det_vs_tsystem(q, v, p, s)
        assert rep.holds, (v, p, s, rep.detail)


def test_det_outside_S_Q():
    q = canonical_height(0, "A2")
    with pytest.raises(ValueError):
        verify_det_vs_tsystem(q, 1, q.h(1) - 10 * q.rh, q.h(1))
