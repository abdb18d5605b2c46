"""Small hand-checkable cases with expected values worked out by hand,
including two complete twisted AR quiver labellings."""

import pytest

from qgr.isom import generator
from qgr.qchar import classical_fm, et, kl_table, lt, verify_tboson
from qgr.qcluster import mutate, seed_from_word
from qgr.qdata import (
    QDatum,
    ar_vertices,
    canonical_height,
    gamma,
    phi,
    source_reflect,
    tau_q,
    validate_qdatum,
    xi_bound,
)
from qgr.qtorus import TCoeff, Y, a_monomial, nakajima_leq, omega_star
from qgr.weyl import beta_sequence, commutation_equal, gls_pair, root_system


def interval(k, l=None, n=5):
    l = l or k
    return tuple(int(k <= i <= l) for i in range(1, n + 1))


A5_QUIVER = {
    (1, -4): interval(4, 5), (1, -2): interval(2, 3), (1, 0): interval(1),
    (2, -5): interval(4), (2, -3): interval(2, 5), (2, -1): interval(1, 3),
    (3, -4): interval(2, 4), (3, -2): interval(1, 5), (3, 0): interval(3),
    (4, -5): interval(2), (4, -3): interval(1, 4), (4, -1): interval(3, 5),
    (5, -4): interval(1, 2), (5, -2): interval(3, 4), (5, 0): interval(5),
}

B3_QUIVER = {
    (1, -6): interval(3, 5), (1, -2): interval(1, 2),
    (2, -8): interval(3, 4), (2, -4): interval(1, 5), (2, 0): interval(2),
    (3, -9): interval(3), (3, -7): interval(4), (3, -5): interval(1, 3),
    (3, -3): interval(4, 5), (3, -1): interval(2, 3),
    (4, -6): interval(1, 4), (4, -2): interval(2, 5),
    (5, -8): interval(1), (5, -4): interval(2, 4), (5, 0): interval(5),
}


@pytest.mark.parametrize("name, xi, quiver", [
    ("A5", (0, -1, 0, -1, 0), A5_QUIVER),
    ("B3", (-2, 0, -1, -2, 0), B3_QUIVER),
])
def test_ar_quiver_labels(name, xi, quiver):
    q = QDatum(name, xi)
    assert validate_qdatum(q) == []
    assert set(ar_vertices(q)) == set(quiver)
    for v, root in quiver.items():
        assert phi(q, *v) == (root, 0)


def test_weight_of_top_vertex():
    q = QDatum("A5", (0, -1, 0, -1, 0))
    assert q.wt({(1, 0): 1}) == interval(1)
    assert q.wt({}) == (0,) * 5


# -- Weyl group -----------------------------------------------------------------

def test_reflections_a2():
    R = root_system("A2")
    assert R.reflect(1, R.varpi(2)) == R.varpi(2)
    assert R.reflect(1, R.varpi(1)) == tuple(a - b for a, b in zip(R.varpi(1), R.alpha(1)))
    assert R.to_alpha(R.reflect(1, R.alpha(2))) == (1, 1)


def test_betas_a2():
    assert beta_sequence("A2", (1, 2, 1)) == ((1, 0), (1, 1), (0, 1))
    assert beta_sequence("A1", (1,)) == ((1,),)


def test_gls_pair_a2():
    p = gls_pair("A2", (1, 2, 1))
    assert p.J_e == (1,)
    assert p.Btilde == ((0,), (1,), (-1,))
    assert (p.lam(1, 2), p.lam(1, 3), p.lam(2, 3)) == (-1, 1, 0)
    assert sum(p.b(k, 1) * p.lam(k, 1) for k in p.J) == 2


def test_commutation_classes():
    assert commutation_equal("A2", (1, 2, 1), (1, 2, 1))
    assert commutation_equal("A3", (1, 3, 2, 1, 3, 2), (3, 1, 2, 3, 1, 2))
    assert not commutation_equal("A2", (1, 2, 1), (2, 1, 2))


def test_mutation_a2():
    s = mutate(seed_from_word("A2", (1, 2, 1)), 1)
    assert set(s.variables[0]) == {(-1, 1, 0), (-1, 0, 1)}
    assert s.pair.is_compatible()


# -- Q-data ---------------------------------------------------------------------

def test_qdatum_a2():
    q = QDatum("A2", (0, -1))
    R = root_system("A2")
    w1 = R.varpi(1)
    assert tau_q(q)(w1) == tuple(a - b for a, b in zip(w1, R.alpha(1)))
    assert gamma(q, 1) == (1, 0)
    assert gamma(q, 2) == (1, 1)
    assert source_reflect(q, 1).xi == (-2, -1)
    with pytest.raises(ValueError):
        source_reflect(q, 2)


def test_invalid_edge():
    report = validate_qdatum(QDatum("A2", (0, 0), check=False))
    assert any("edge (1,2)" in r for r in report)


def test_xi_bounds():
    assert xi_bound("A1", 1, 1) == 0
    assert xi_bound("A2", 1, 2) == 1


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("b", [0, 2, -4])
def test_canonical_sink_source_a(n, b):
    q = canonical_height(b, f"A{n}")
    assert q.xi == tuple(b - q.eps(i) for i in range(1, n + 1))


def test_canonical_b2():
    assert validate_qdatum(canonical_height(0, "B2")) == []


# -- torus and characters -------------------------------------------------------

def test_nakajima_order_a1():
    ok, cert = nakajima_leq("A1", Y(1, 2, -1), Y(1, 0))
    assert ok and cert == {(1, 1): 1}
    assert not nakajima_leq("A1", Y(1, 0), Y(1, 4))[0]
    assert not nakajima_leq("A1", Y(1, 4), Y(1, 0))[0]


def test_a_monomial_b2_long_neighbour():
    A = a_monomial("B2", 1, 3)
    assert A[(2, 2)] == -1 and A[(2, 4)] == -1


def test_dual_shift():
    assert omega_star("A3", Y(1, 0)) == Y(3, -4)
    assert omega_star("B2", Y(1, 0)) == Y(1, -6)


def test_classical_a1():
    assert classical_fm("A1", "Y[1,0]").element == {Y(1, 0): 1, Y(1, 2, -1): 1}
    assert classical_fm("A1", "Y[1,0]Y[1,2]").element == {
        Y(1, 0) * Y(1, 2): 1, Y(1, 0) * Y(1, 4, -1): 1, Y(1, 2, -1) * Y(1, 4, -1): 1}
    chi = classical_fm("A1", "Y[1,0]Y[1,2]^2").element
    assert len(chi) == 5 and sorted(chi.values()) == [1, 1, 1, 1, 2]
    assert chi[Y(1, 0) * Y(1, 2) * Y(1, 4, -1)] == 2


def test_standard_and_simple_a1():
    E = et("A1", "Y[1,0]Y[1,2]").element
    L = lt("A1", "Y[1,0]Y[1,2]").element
    T = E.torus
    assert E - L == T.t(2)
    assert kl_table("A1", "Y[1,0]Y[1,2]") == {Y(1, 0) ** 0: TCoeff.t(2)}


def test_boson_relation_both_signs_a1():
    assert verify_tboson("A1", 1, 0, 1)[0]
    assert verify_tboson("A1", 1, 0, -1)[0]


def test_adjacent_generators_a1():
    q = canonical_height(0, "A1")
    x0, x1 = generator(q, 1, 0), generator(q, 1, 1)
    T = x0.torus
    assert x0 * x1 == (x1 * x0).shift(-4) + T.one() - T.t(-4)
