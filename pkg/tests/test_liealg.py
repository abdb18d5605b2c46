import pytest
from hypothesis import given, settings, strategies as st

from qgr.liealg import cartan_inverse, lie_type, quantum_cartan_entry, star, star_bruteforce, tilde_c

from oracles import TABLE1, tilde_c_series

TYPES = sorted(TABLE1)
SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"]


@pytest.mark.parametrize("name", TYPES)
def test_constants(name):
    g = lie_type(name)
    assert (g.r, g.h_dual, g.ell0) == TABLE1[name]
    assert g.rank * g.rh == 2 * g.ell0


@pytest.mark.parametrize("name", TYPES)
def test_symmetrizer(name):
    g = lie_type(name)
    n = g.rank
    for i in range(n):
        for j in range(n):
            assert g.d[i] * g.cartan[i][j] == g.d[j] * g.cartan[j][i]


@pytest.mark.parametrize("name", TYPES)
def test_star_matches_longest_element(name):
    g = lie_type(name)
    for i in g.vertices:
        assert star(g, i) == star_bruteforce(g, i)
        assert star(g, star(g, i)) == i


@pytest.mark.parametrize("name,expected", [
    ("A4", [4, 3, 2, 1]),
    ("D5", [1, 2, 3, 5, 4]),
    ("D4", [1, 2, 3, 4]),
    ("E6", [6, 2, 5, 4, 3, 1]),
    ("B3", [1, 2, 3]),
])
def test_star_examples(name, expected):
    g = lie_type(name)
    assert [star(g, i) for i in g.vertices] == expected


def test_parse():
    assert lie_type("b3") == lie_type("B3") == lie_type(" B_3 ")
    with pytest.raises(ValueError):
        lie_type("X9")


@pytest.mark.parametrize("name", TYPES)
def test_cartan_inverse(name):
    g = lie_type(name)
    Ci = cartan_inverse(g)
    n = g.rank
    for i in range(n):
        for j in range(n):
            assert sum(g.cartan[i][k] * Ci[k][j] for k in range(n)) == (i == j)


def test_quantum_cartan_entries():
    # vertex 1 is the long root here
    g = lie_type("G2")
    assert g.d == (3, 1)
    assert quantum_cartan_entry(g, 1, 1) == {3: 1, -3: 1}
    assert quantum_cartan_entry(g, 2, 2) == {1: 1, -1: 1}
    assert quantum_cartan_entry(g, 1, 2) == {0: -1}
    assert quantum_cartan_entry(g, 2, 1) == {-2: -1, 0: -1, 2: -1}


@pytest.mark.parametrize("name", SMALL)
def test_tilde_c_against_series(name):
    g = lie_type(name)
    N = 4 * g.rh
    S = tilde_c_series(name, N)
    for (i, j), row in S.items():
        assert [tilde_c(g, i, j, u) for u in range(1, N)] == row[1:]


def test_tilde_c_a1_values():
    g = lie_type("A1")
    assert [tilde_c(g, 1, 1, u) for u in range(0, 9)] == [0, 1, 0, -1, 0, 1, 0, -1, 0]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.integers(min_value=0, max_value=400))
def test_tilde_c_periodicity(name, u):
    g = lie_type(name)
    for i in g.vertices:
        for j in g.vertices:
            assert tilde_c(g, i, j, u + g.rh) == -tilde_c(g, i, star(g, j), u)
            assert tilde_c(g, i, j, u + 2 * g.rh) == tilde_c(g, i, j, u)
