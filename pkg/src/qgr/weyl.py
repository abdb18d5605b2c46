"""
Weight-lattice arithmetic for simply-laced diagrams.

Weights are integer tuples in the basis of fundamental weights, so that
``alpha_i`` is the ``i``-th column of the Cartan matrix and
``(varpi_i, alpha_j) = delta_ij``.  Roots handed back to callers are
expressed in simple-root coordinates unless stated otherwise.

Also here: reduced words, their beta-sequences, commutation classes and
the compatible pair ``(Lambda, B~)`` attached to a reduced word of the
longest element.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .liealg import LieType, cartan_inverse, lie_type

__all__ = [
    "RootSystem",
    "root_system",
    "apply_reflection",
    "beta_sequence",
    "NotReducedError",
    "ReducedWord",
    "CompatiblePair",
    "gls_pair",
    "commutation_normal_form",
    "commutation_equal",
    "ar_arrows",
    "hasse_arrows",
    "reduced_word_of",
    "braid_path",
    "apply_braid_moves",
    "lusztig_transition",
]


class NotReducedError(ValueError):
    pass


class RootSystem:
    """Roots and weights of a simply-laced Cartan type."""

    def __init__(self, g: LieType):
        if not g.is_simply_laced:
            raise ValueError(f"{g.name} is not simply laced")
        self.g = g
        self.n = g.rank
        self._cinv = cartan_inverse(g)

    def __repr__(self):
        return f"RootSystem({self.g.name})"

    # coordinates
    def alpha(self, i: int) -> tuple:
        return tuple(self.g.cartan[k][i - 1] for k in range(self.n))

    def varpi(self, i: int) -> tuple:
        return tuple(int(k == i - 1) for k in range(self.n))

    def to_varpi(self, a) -> tuple:
        """Simple-root coordinates to fundamental-weight coordinates."""
        C = self.g.cartan
        return tuple(sum(C[k][j] * a[j] for j in range(self.n)) for k in range(self.n))

    def to_alpha(self, w) -> tuple:
        """Inverse of :meth:`to_varpi`; raises if the result is not integral."""
        out = []
        for k in range(self.n):
            x = sum(self._cinv[k][j] * w[j] for j in range(self.n))
            if x.denominator != 1:
                raise ValueError(f"{w} is not in the root lattice")
            out.append(int(x))
        return tuple(out)

    def pairing(self, x, y):
        """Symmetric form on weights in fundamental-weight coordinates."""
        s = Fraction(0)
        for i in range(self.n):
            if x[i]:
                for j in range(self.n):
                    if y[j]:
                        s += x[i] * self._cinv[i][j] * y[j]
        return int(s) if s.denominator == 1 else s

    def reflect(self, i: int, w) -> tuple:
        c = w[i - 1]
        if not c:
            return tuple(w)
        a = self.alpha(i)
        return tuple(x - c * y for x, y in zip(w, a))

    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots in simple-root coordinates, by height then lex."""
        simple = [tuple(int(k == i) for k in range(self.n)) for i in range(self.n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for b in layer:
                bw = self.to_varpi(b)
                for i in range(self.n):
                    # beta + alpha_i is a root iff (beta, alpha_i) = -1
                    if bw[i] == -1:
                        c = tuple(x + (k == i) for k, x in enumerate(b))
                        if c not in found:
                            found.add(c)
                            nxt.append(c)
            layer = nxt
        return tuple(sorted(found, key=lambda b: (sum(b), b)))

    @cached_property
    def _positive_varpi(self) -> frozenset:
        return frozenset(self.to_varpi(b) for b in self.positive_roots)

    def is_positive_root(self, w) -> bool:
        return tuple(w) in self._positive_varpi

    def is_root(self, w) -> bool:
        w = tuple(w)
        return w in self._positive_varpi or tuple(-x for x in w) in self._positive_varpi

    @cached_property
    def rho(self) -> tuple:
        return (1,) * self.n

    def act(self, word, w) -> tuple:
        """``s_{w[0]} s_{w[1]} ... s_{w[-1]} (w)``."""
        for i in reversed(word):
            w = self.reflect(i, w)
        return tuple(w)


@lru_cache(maxsize=None)
def root_system(g) -> RootSystem:
    return RootSystem(lie_type(g))


def apply_reflection(g, i: int, w) -> tuple:
    """``s_i(w) = w - (w, alpha_i) alpha_i`` with ``w`` in fundamental-weight
    coordinates."""
    return root_system(g).reflect(i, tuple(w))


def beta_sequence(g, word) -> tuple:
    """``beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})`` in simple-root
    coordinates; raises :class:`NotReducedError` at the first non-positive
    entry."""
    R = root_system(g)
    out = []
    for k, i in enumerate(word):
        b = R.act(word[:k], R.alpha(i))
        if not R.is_positive_root(b):
            raise NotReducedError(
                f"word {tuple(word)} is not reduced: position {k + 1} gives {R.to_alpha(b)}")
        out.append(R.to_alpha(b))
    return tuple(out)


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word with its cached combinatorics."""

    g: LieType
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        beta_sequence(self.g, self.letters)

    def __len__(self):
        return len(self.letters)

    @cached_property
    def betas(self) -> tuple:
        return beta_sequence(self.g, self.letters)

    def residue(self, beta) -> int:
        return self.letters[self.betas.index(tuple(beta))]

    def plus(self, s: int) -> int:
        """``s^+``: next position (1-based) carrying the same letter, or
        ``len + 1``."""
        i = self.letters[s - 1]
        for t in range(s + 1, len(self) + 1):
            if self.letters[t - 1] == i:
                return t
        return len(self) + 1

    def minus(self, s: int) -> int:
        """``s^-``: previous position with the same letter, or 0."""
        i = self.letters[s - 1]
        for t in range(s - 1, 0, -1):
            if self.letters[t - 1] == i:
                return t
        return 0

    def w_le(self, s: int, w) -> tuple:
        """``w_{<=s}(w) = s_{i_1} ... s_{i_s}(w)``."""
        return root_system(self.g).act(self.letters[:s], w)

    def lam(self, s: int) -> tuple:
        """``lambda`` attached to position ``s``: ``w_{<=s} varpi_{i_s}``."""
        R = root_system(self.g)
        return self.w_le(s, R.varpi(self.letters[s - 1]))

    @cached_property
    def element(self) -> tuple:
        """The Weyl group element, encoded by its value on ``rho``."""
        R = root_system(self.g)
        return R.act(self.letters, R.rho)


@dataclass(frozen=True)
class CompatiblePair:
    """Skew-symmetric ``Lambda`` on ``J`` and exchange matrix ``B~`` on
    ``J x J_e``; rows and columns follow the order of ``J`` and ``J_e``."""

    J: tuple
    J_e: tuple
    Lambda: tuple
    Btilde: tuple
    d: int = 2

    @property
    def J_f(self) -> tuple:
        return tuple(j for j in self.J if j not in self.J_e)

    def lam(self, s, t) -> int:
        return self.Lambda[self.J.index(s)][self.J.index(t)]

    def b(self, s, t) -> int:
        return self.Btilde[self.J.index(s)][self.J_e.index(t)]

    def is_compatible(self) -> bool:
        n = len(self.J)
        for a, s in enumerate(self.J_e):
            for tt in range(n):
                val = sum(self.Btilde[k][a] * self.Lambda[k][tt] for k in range(n))
                if val != (self.d if self.J[tt] == s else 0):
                    return False
        return True

    def is_skew(self) -> bool:
        n = len(self.J)
        return all(self.Lambda[a][b] == -self.Lambda[b][a] for a in range(n) for b in range(n))

    def principal_skew(self) -> bool:
        rows = [self.J.index(s) for s in self.J_e]
        m = len(self.J_e)
        return all(self.Btilde[rows[a]][b] == -self.Btilde[rows[b]][a]
                   for a in range(m) for b in range(m))


def gls_pair(g, word) -> CompatiblePair:
    """The compatible pair of a reduced word for ``w0``."""
    g = lie_type(g)
    R = root_system(g)
    rw = word if isinstance(word, ReducedWord) else ReducedWord(g, tuple(word))
    ell = len(rw)
    if ell != len(R.positive_roots):
        raise ValueError(f"word of length {ell} is not a reduced word for w0 of {g.name}")
    ii = rw.letters
    plus = [None] + [rw.plus(s) for s in range(1, ell + 1)]
    J = tuple(range(1, ell + 1))
    J_e = tuple(s for s in J if plus[s] != ell + 1)

    def b(s, t):
        adj = g.adjacent(ii[s - 1], ii[t - 1])
        if s == plus[t]:
            return -1
        if t == plus[s]:
            return 1
        if adj and t < s < plus[t] < plus[s]:
            return 1
        if adj and s < t < plus[s] < plus[t]:
            return -1
        return 0

    lam_cache = {}

    def Lam(s, t):
        if s == t:
            return 0
        if s > t:
            return -Lam(t, s)
        key = (s, t)
        if key not in lam_cache:
            vs, vt = R.varpi(ii[s - 1]), R.varpi(ii[t - 1])
            x = tuple(a - c for a, c in zip(vs, rw.lam(s)))
            y = tuple(a + c for a, c in zip(vt, rw.lam(t)))
            lam_cache[key] = R.pairing(x, y)
        return lam_cache[key]

    Lambda = tuple(tuple(Lam(s, t) for t in J) for s in J)
    Btilde = tuple(tuple(b(s, t) for t in J_e) for s in J)
    return CompatiblePair(J, J_e, Lambda, Btilde, 2)


def commutation_normal_form(g, word) -> tuple:
    """Lexicographically least word reachable by commuting swaps."""
    g = lie_type(g)
    word = tuple(word)
    n = len(word)
    # position k must wait for every earlier position with a non-commuting letter
    preds = [{j for j in range(k) if word[j] == word[k] or g.adjacent(word[j], word[k])}
             for k in range(n)]
    done, out = set(), []
    while len(out) < n:
        ready = [k for k in range(n) if k not in done and preds[k] <= done]
        k = min(ready, key=lambda k: (word[k], k))
        done.add(k)
        out.append(word[k])
    return tuple(out)


def commutation_equal(g, w1, w2) -> bool:
    """Whether two reduced words are related by commuting swaps."""
    g = lie_type(g)
    a, b = ReducedWord(g, tuple(w1)), ReducedWord(g, tuple(w2))
    if a.element != b.element:
        raise ValueError("words represent different Weyl group elements")
    return commutation_normal_form(g, a.letters) == commutation_normal_form(g, b.letters)


def ar_arrows(g, word) -> set:
    """Arrows ``beta_k -> beta_j`` of the combinatorial AR quiver."""
    g = lie_type(g)
    rw = ReducedWord(g, tuple(word))
    ii, B = rw.letters, rw.betas
    out = set()
    for k in range(len(ii)):
        for j in range(k):
            if g.adjacent(ii[j], ii[k]) and not any(
                    ii[x] in (ii[j], ii[k]) for x in range(j + 1, k)):
                out.add((B[k], B[j]))
    return out


def hasse_arrows(g, word) -> set:
    """Covering relations of the heap order of ``word`` as arrows
    ``later -> earlier`` between roots."""
    g = lie_type(g)
    rw = ReducedWord(g, tuple(word))
    ii, B = rw.letters, rw.betas
    n = len(ii)
    below = [set() for _ in range(n)]
    for k in range(n):
        for j in range(k):
            if ii[j] == ii[k] or g.adjacent(ii[j], ii[k]):
                below[k] |= below[j] | {j}
    out = set()
    for k in range(n):
        for j in below[k]:
            if not any(j in below[x] for x in below[k]):
                out.add((B[k], B[j]))
    return out


# -- braid moves and PBW transitions --------------------------------------------

def _rho_image(R: RootSystem, word) -> tuple:
    return R.act(word, (1,) * R.n)


def reduced_word_of(R: RootSystem, lam) -> tuple:
    """A reduced word of the element ``x`` with ``x(rho) = lam``; each letter
    is a left descent of what remains."""
    lam = tuple(lam)
    out = []
    while True:
        i = next((k + 1 for k, c in enumerate(lam) if c < 0), None)
        if i is None:
            return tuple(out)
        out.append(i)
        lam = R.reflect(i, lam)


def braid_path(g, u, v) -> list:
    """Moves turning the reduced word ``u`` into ``v`` (same element).

    A move is ``(position, m)``: the ``m`` letters starting at ``position``
    are a rank-two longest word, replaced by the other one (``m = 2`` is a
    commutation, ``m = 3`` a braid move)."""
    g = lie_type(g)
    R = root_system(g)
    u, v = tuple(u), tuple(v)
    if _rho_image(R, u) != _rho_image(R, v):
        raise ValueError("the two words represent different elements")
    moves = []

    def rec(u, v, off):
        if u == v:
            return
        if u[0] == v[0]:
            rec(u[1:], v[1:], off + 1)
            return
        a, b = u[0], v[0]
        m = 3 if g.adjacent(a, b) else 2
        za = tuple(a if k % 2 == 0 else b for k in range(m))
        zb = tuple(b if k % 2 == 0 else a for k in range(m))
        lam = _rho_image(R, u)
        for i in za:
            lam = R.reflect(i, lam)
        rest = reduced_word_of(R, lam)
        U, V = za + rest, zb + rest
        rec(u, U, off)
        moves.append((off, m))
        rec(V, v, off)

    rec(u, v, 0)
    return moves


def apply_braid_moves(word, moves) -> tuple:
    w = list(word)
    for pos, m in moves:
        seg = w[pos:pos + m]
        a, b = seg[0], seg[1]
        w[pos:pos + m] = [b if k % 2 == 0 else a for k in range(m)]
    return tuple(w)


def lusztig_transition(g, u, v, c) -> tuple:
    """Transport the PBW datum ``c`` on the reduced word ``u`` of ``w0`` to
    the word ``v`` by Lusztig's piecewise-linear moves."""
    c = list(c)
    for pos, m in braid_path(g, u, v):
        if m == 2:
            c[pos], c[pos + 1] = c[pos + 1], c[pos]
        else:
            x, y, z = c[pos:pos + 3]
            p = min(x, z)
            c[pos:pos + 3] = [y + z - p, p, x + y - p]
    return tuple(c)
