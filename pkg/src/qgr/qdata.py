"""
Unfoldings, Q-data and the combinatorics attached to them.

A Q-datum is a height function ``xi`` on the unfolded simply-laced
diagram ``(Delta, sigma)`` of a Cartan type.  From it we build the
generalized Coxeter element ``tau``, the roots ``gamma_i``, the coordinate
bijection ``phi`` between the repetition quiver and ``R+ x Z``, the twisted
AR quiver and the Q-weights of monomials.

Vertices of ``Delta`` are written with plain integers ``1..N``; the folded
vertex of ``v`` is ``Unfolding.bar(v)``.

    >>> q = QDatum("B3", (-2, 0, -1, -2, 0))
    >>> q.phi(1, -6)
    ((0, 0, 1, 1, 1), 0)
"""
from __future__ import annotations

import random as _random
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .liealg import LieType, lie_type, lie_type_data, star as _star, tilde_c
from .weyl import root_system

__all__ = [
    "Unfolding",
    "unfolding",
    "QDatum",
    "InvalidQDatum",
    "validate_qdatum",
    "source_reflect",
    "tau_q",
    "gamma",
    "phi",
    "phi_inverse",
    "ar_vertices",
    "canonical_height",
    "height_functions",
    "random_qdatum",
    "wt_q",
    "xi_bound",
    "adapted_word",
    "tc_mismatches",
    "xi_lemma_violations",
    "Tau",
]


class InvalidQDatum(ValueError):
    pass


# -- unfoldings --------------------------------------------------------------

@dataclass(frozen=True)
class Unfolding:
    g: LieType
    delta: LieType
    sigma: tuple
    barmap: tuple

    @property
    def vertices(self) -> range:
        return self.delta.vertices

    def bar(self, v: int) -> int:
        return self.barmap[v - 1]

    def s(self, v: int, k: int = 1) -> int:
        for _ in range(k % self.g.r if self.g.r > 1 else 0):
            v = self.sigma[v - 1]
        return v

    def d(self, v: int) -> int:
        return self.g.di(self.bar(v))

    def orbit(self, i: int) -> tuple:
        return tuple(v for v in self.vertices if self.bar(v) == i)

    def star(self, v: int) -> int:
        return _star(self.delta, v)

    def adjacent(self, u: int, v: int) -> bool:
        return self.delta.adjacent(u, v)

    def neighbours(self, v: int) -> tuple:
        return self.delta.neighbours(v)

    def lift(self, i: int, p: int, xi) -> int:
        """``f^{-1}``: the vertex over ``i`` whose lattice contains ``p``."""
        for v in self.orbit(i):
            if (p - xi[v - 1]) % (2 * self.d(v)) == 0:
                return v
        raise ValueError(f"({i},{p}) is off the lattice")


@lru_cache(maxsize=None)
def unfolding(g) -> Unfolding:
    g = lie_type(g)
    n = g.rank
    if g.is_simply_laced:
        return Unfolding(g, g, tuple(g.vertices), tuple(g.vertices))
    if g.family == "B":
        N = 2 * n - 1
        sigma = tuple(2 * n - k for k in range(1, N + 1))
        bar = tuple(min(k, 2 * n - k) for k in range(1, N + 1))
        return Unfolding(g, lie_type_data("A", N), sigma, bar)
    if g.family == "C":
        N = n + 1
        sigma = tuple(range(1, n)) + (n + 1, n)
        bar = tuple(range(1, n + 1)) + (n,)
        return Unfolding(g, lie_type_data("D", N, low_d=True), sigma, bar)
    if g.family == "F":
        sigma = (6, 2, 5, 4, 3, 1)
        bar = (1, 4, 2, 3, 2, 1)
        return Unfolding(g, lie_type_data("E", 6), sigma, bar)
    sigma = (3, 2, 4, 1)
    bar = (1, 2, 1, 1)
    return Unfolding(g, lie_type_data("D", 4), sigma, bar)


# -- linear maps on the weight lattice of Delta ------------------------------

class Tau:
    """An integer matrix acting on fundamental-weight coordinates."""

    __slots__ = ("M", "N")

    def __init__(self, M):
        self.M = tuple(tuple(r) for r in M)
        self.N = len(self.M)

    @classmethod
    def identity(cls, N):
        return cls([[int(a == b) for b in range(N)] for a in range(N)])

    def __call__(self, w) -> tuple:
        return tuple(sum(r[j] * w[j] for j in range(self.N)) for r in self.M)

    def __matmul__(self, other: "Tau") -> "Tau":
        B = other.M
        return Tau([[sum(r[k] * B[k][j] for k in range(self.N)) for j in range(self.N)]
                    for r in self.M])

    def __eq__(self, other):
        return isinstance(other, Tau) and self.M == other.M

    def __hash__(self):
        return hash(self.M)

    def __pow__(self, k: int) -> "Tau":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Tau.identity(self.N), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def order(self, bound: int = 1000) -> int:
        I = Tau.identity(self.N)
        x = self
        for k in range(1, bound + 1):
            if x == I:
                return k
            x = x @ self
        raise RuntimeError("order not found")

    def inverse(self) -> "Tau":
        return self ** (self.order() - 1)

    def is_minus_identity(self) -> bool:
        return all(self.M[a][b] == -int(a == b) for a in range(self.N) for b in range(self.N))


def _reflection(delta: LieType, v: int) -> Tau:
    N = delta.rank
    M = [[int(a == b) for b in range(N)] for a in range(N)]
    for a in range(N):
        M[a][v - 1] -= delta.cartan[a][v - 1]
    return Tau(M)


def _sigma_matrix(U: Unfolding) -> Tau:
    N = U.delta.rank
    M = [[0] * N for _ in range(N)]
    for v in U.vertices:
        M[U.sigma[v - 1] - 1][v - 1] = 1
    return Tau(M)


# -- Q-data ------------------------------------------------------------------

class QDatum:
    """A Q-datum ``(Delta, sigma, xi)``; ``xi`` is indexed by ``1..N``."""

    def __init__(self, g, xi, check: bool = True):
        self.g = lie_type(g)
        self.U = unfolding(self.g)
        self.xi = tuple(int(x) for x in xi)
        if len(self.xi) != self.U.delta.rank:
            raise InvalidQDatum(f"expected {self.U.delta.rank} heights, got {len(self.xi)}")
        if check:
            bad = validate_qdatum(self)
            if bad:
                raise InvalidQDatum("; ".join(bad))
        self._phi = {}

    def __repr__(self):
        return f"QDatum({self.g.name}, {self.xi})"

    def __eq__(self, other):
        return isinstance(other, QDatum) and (self.g, self.xi) == (other.g, other.xi)

    def __hash__(self):
        return hash((self.g, self.xi))

    # basic data
    @property
    def delta(self) -> LieType:
        return self.U.delta

    @property
    def rh(self) -> int:
        return self.g.rh

    def h(self, v: int) -> int:
        return self.xi[v - 1]

    def d(self, v: int) -> int:
        return self.U.d(v)

    @property
    def parity(self) -> int:
        """Uniform offset ``c`` with ``xi_v = eps_{bar v} + c`` mod 2."""
        return (self.xi[0] - self.g.eps(self.U.bar(1))) % 2

    def eps(self, i: int) -> int:
        """Parity of the lattice ``{p : (i,p) in I^}`` for this datum."""
        return (self.g.eps(i) + self.parity) % 2

    def on_lattice(self, v: int, p: int) -> bool:
        return (p - self.h(v)) % (2 * self.d(v)) == 0

    def lift(self, i: int, p: int) -> int:
        return self.U.lift(i, p, self.xi)

    def vstar(self, v: int) -> int:
        return self.U.star(v)

    def is_source(self, v: int) -> bool:
        return all(self.h(v) > self.h(u) for u in self.U.neighbours(v))

    def is_sink(self, v: int) -> bool:
        return all(self.h(v) < self.h(u) for u in self.U.neighbours(v))

    def with_xi(self, xi, check=True) -> "QDatum":
        return QDatum(self.g, xi, check=check)

    def shifted(self, k: int) -> "QDatum":
        return QDatum(self.g, tuple(x + k for x in self.xi), check=False)

    # Coxeter element
    def top_vertex(self, i: int) -> int:
        return max(self.U.orbit(i), key=self.h)

    def satisfies_tau_condition(self) -> bool:
        for i in self.g.vertices:
            top = self.top_vertex(i)
            for k in range(1, self.g.di(i)):
                if self.h(self.U.s(top, k)) != self.h(top) - 2 * k:
                    return False
        return True

    @cached_property
    def reflection_path(self) -> tuple:
        """Moves ``v_1, ..., v_k`` (source lowerings or sink raisings) leading
        to a datum satisfying the Coxeter condition."""
        start = self
        key = lambda q: tuple(x - q.xi[0] for x in q.xi)
        seen = {key(start): None}
        queue = deque([(start, ())])
        limit = 2 * self.delta.rank * self.rh
        while queue:
            q, path = queue.popleft()
            if q.satisfies_tau_condition():
                return path
            if len(path) > limit:
                break
            for v in self.U.vertices:
                if q.is_source(v):
                    xi = list(q.xi)
                    xi[v - 1] -= 2 * q.d(v)
                elif q.is_sink(v):
                    xi = list(q.xi)
                    xi[v - 1] += 2 * q.d(v)
                else:
                    continue
                nq = QDatum(self.g, xi, check=False)
                if validate_qdatum(nq):
                    continue
                k = key(nq)
                if k not in seen:
                    seen[k] = True
                    queue.append((nq, path + (v,)))
        raise RuntimeError(f"no reflection path found for {self!r}")

    @cached_property
    def tau(self) -> Tau:
        U = self.U
        path = self.reflection_path
        end = QDatum(self.g, self._apply_path(path), check=False)
        tops = sorted((end.top_vertex(i) for i in self.g.vertices),
                      key=lambda v: -end.h(v))
        T = Tau.identity(self.delta.rank)
        for v in tops:
            T = T @ _reflection(self.delta, v)
        T = T @ _sigma_matrix(U)
        # tau_Q = s_{v1} ... s_{vk} tau_end s_{vk} ... s_{v1}
        for v in reversed(path):
            S = _reflection(self.delta, v)
            T = S @ T @ S
        return T

    def _apply_path(self, path):
        xi = list(self.xi)
        for v in path:
            nb = self.U.neighbours(v)
            if all(xi[v - 1] > xi[u - 1] for u in nb):
                xi[v - 1] -= 2 * self.d(v)
            else:
                xi[v - 1] += 2 * self.d(v)
        return tuple(xi)

    @cached_property
    def tau_inverse(self) -> Tau:
        return self.tau.inverse()

    @cached_property
    def _tau_d(self) -> dict:
        ds = sorted({self.d(v) for v in self.U.vertices})
        return {d: (self.tau ** d, self.tau_inverse ** d) for d in ds}

    def gamma_varpi(self, v: int) -> tuple:
        T = self._tau_d[self.d(v)][0]
        w = root_system(self.delta).varpi(v)
        return tuple(a - b for a, b in zip(w, T(w)))

    def gamma(self, v: int) -> tuple:
        R = root_system(self.delta)
        gv = self.gamma_varpi(v)
        if not R.is_positive_root(gv):
            raise RuntimeError(f"gamma_{v} is not a positive root")
        return R.to_alpha(gv)

    # coordinates
    def _phi_varpi(self, v: int, p: int):
        if not self.on_lattice(v, p):
            raise ValueError(f"({v},{p}) is not on the repetition quiver lattice")
        memo = self._phi.setdefault(v, {})
        if p in memo:
            return memo[p]
        R = root_system(self.delta)
        d = self.d(v)
        fwd, back = self._tau_d[d]
        top = self.h(v)
        if top not in memo:
            memo[top] = (self.gamma_varpi(v), 0)
        step = 2 * d if p > top else -2 * d
        cur = top
        while cur != p:
            a, k = memo[cur]
            nxt = cur + step
            if nxt not in memo:
                # going up applies tau^{-d}, going down tau^{d}
                b = back(a) if step > 0 else fwd(a)
                if R.is_positive_root(b):
                    memo[nxt] = (b, k)
                else:
                    memo[nxt] = (tuple(-x for x in b), k + (1 if step > 0 else -1))
            cur = nxt
        return memo[p]

    def phi(self, v: int, p: int) -> tuple:
        """``phi(v, p) = (alpha, k)`` with ``alpha`` in simple-root coordinates."""
        a, k = self._phi_varpi(v, p)
        return root_system(self.delta).to_alpha(a), k

    def phibar(self, i: int, p: int) -> tuple:
        return self.phi(self.lift(i, p), p)

    @cached_property
    def ar_vertices(self) -> tuple:
        out = []
        for v in self.U.vertices:
            lo = self.h(self.vstar(v)) - self.rh
            p = self.h(v)
            while p > lo:
                out.append((v, p))
                p -= 2 * self.d(v)
        return tuple(sorted(out, key=lambda x: (-x[1], x[0])))

    @cached_property
    def hat_I(self) -> frozenset:
        """``I^_Q``: the folded vertex set of the twisted AR quiver."""
        return frozenset((self.U.bar(v), p) for v, p in self.ar_vertices)

    @cached_property
    def _gamma_inverse(self) -> dict:
        return {self.phi(v, p)[0]: (v, p) for v, p in self.ar_vertices}

    def phi_inverse(self, alpha, k: int = 0) -> tuple:
        v, p = self._gamma_inverse[tuple(alpha)]
        for _ in range(k % 2 if k >= 0 else (-k) % 2):
            v = self.vstar(v)
        return v, p + k * self.rh

    def phibar_inverse(self, alpha, k: int = 0) -> tuple:
        v, p = self.phi_inverse(alpha, k)
        return self.U.bar(v), p

    def pi_phibar(self, i: int, p: int) -> tuple:
        a, k = self.phibar(i, p)
        return a if k % 2 == 0 else tuple(-x for x in a)

    def wt(self, m) -> tuple:
        """Q-weight of a monomial (simple-root coordinates)."""
        N = self.delta.rank
        out = [0] * N
        for (i, p), e in _items(m):
            a = self.pi_phibar(i, p)
            for k in range(N):
                out[k] += e * a[k]
        return tuple(out)

    def in_window(self, i: int, p: int) -> bool:
        return (i, p) in self.hat_I

    def le_xi(self, i: int, p: int) -> bool:
        """``(i,p)`` lies in ``I^_{<= xi}``."""
        return p <= self.h(self.lift(i, p))

    # renderings
    def root_label(self, alpha) -> str:
        """``[a,b]`` for an interval root of type A, else a coefficient list."""
        nz = [k + 1 for k, x in enumerate(alpha) if x]
        if self.delta.family == "A" and all(x in (0, 1) for x in alpha) \
                and nz == list(range(nz[0], nz[-1] + 1)):
            return f"[{nz[0]}]" if len(nz) == 1 else f"[{nz[0]},{nz[-1]}]"
        return "(" + "".join(str(x) for x in alpha) + ")"

    def to_dot(self) -> str:
        lines = [f'digraph "Gamma_{self.g.name}" {{', "  rankdir=LR;"]
        verts = set(self.ar_vertices)
        for v, p in sorted(verts, key=lambda x: (x[1], x[0])):
            a, _ = self.phi(v, p)
            lines.append(f'  "{v},{p}" [label="{self.root_label(a)}", pos="{p},{-v}!"];')
        for v, p in sorted(verts, key=lambda x: (x[1], x[0])):
            for u in self.U.neighbours(v):
                s = p + min(self.d(v), self.d(u))
                if (u, s) in verts:
                    lines.append(f'  "{v},{p}" -> "{u},{s}";')
        lines.append("}")
        return "\n".join(lines)

    def to_ascii(self) -> str:
        verts = {(v, p): self.root_label(self.phi(v, p)[0]) for v, p in self.ar_vertices}
        ps = sorted({p for _, p in verts})
        cols = list(range(ps[0], ps[-1] + 1))
        width = max(len(s) for s in verts.values()) + 1
        head = "v\\p".ljust(5) + "".join(str(p).rjust(width) for p in cols)
        rows = [head]
        for v in self.U.vertices:
            rows.append(str(v).ljust(5) + "".join(verts.get((v, p), ".").rjust(width)
                                                   for p in cols))
        return "\n".join(rows)


def _items(m):
    if hasattr(m, "items"):
        return m.items()
    return m


# -- module level API --------------------------------------------------------

def validate_qdatum(q: QDatum) -> list:
    """Violations of the height-function conditions (empty list = valid)."""
    U, g, xi = q.U, q.g, q.xi
    h = lambda v: xi[v - 1]
    bad = []
    for (u, v) in U.delta.edges:
        du, dv = U.d(u), U.d(v)
        if du == dv and abs(h(u) - h(v)) != du:
            bad.append(f"edge ({u},{v}): |xi_{u} - xi_{v}| = {abs(h(u) - h(v))}, expected {du}")
    for (i, j) in g.edges:
        for a, b in ((i, j), (j, i)):
            if g.di(a) == 1 < g.di(b):
                (u,) = U.orbit(a)
                hits = [w for w in U.orbit(b)
                        if abs(h(u) - h(w)) == 1
                        and all(h(U.s(w, k)) == h(w) - 2 * k for k in range(1, g.r))]
                if len(hits) != 1:
                    bad.append(f"orbit edge ({a},{b}): {len(hits)} admissible vertices over {b}, expected 1")
    par = {(h(v) - g.eps(U.bar(v))) % 2 for v in U.vertices}
    if len(par) > 1:
        bad.append("parity: heights are not congruent to the parity function")
    return bad


def source_reflect(q: QDatum, v: int) -> QDatum:
    if not q.is_source(v):
        raise InvalidQDatum(f"vertex {v} is not a source of {q!r}")
    xi = list(q.xi)
    xi[v - 1] -= 2 * q.d(v)
    return QDatum(q.g, xi)


def tau_q(q: QDatum) -> Tau:
    return q.tau


def gamma(q: QDatum, v: int) -> tuple:
    return q.gamma(v)


def phi(q: QDatum, v: int, p: int) -> tuple:
    return q.phi(v, p)


def phi_inverse(q: QDatum, alpha, k: int = 0) -> tuple:
    return q.phi_inverse(alpha, k)


def ar_vertices(q: QDatum) -> tuple:
    return q.ar_vertices


def wt_q(q: QDatum, m) -> tuple:
    return q.wt(m)


def canonical_height(b: int, g) -> QDatum:
    """A Q-datum with ``I^_Q = {(i,p) : b - r h^vee < p <= b}``."""
    g = lie_type(g)
    U = unfolding(g)
    eps = lambda v: g.eps(U.bar(v))
    even = (b % 2 == 0)
    if g.is_simply_laced:
        xi = [b - eps(v) if even else b - 1 + eps(v) for v in U.vertices]
    elif g.family == "B":
        n = g.rank
        xi = []
        for v in U.vertices:
            k = v - n
            low = (k < 0 and k % 2 == 0) or (k > 0 and k % 2 == 1)
            base = (b - eps(v)) if even else (b - 1 + eps(v))
            xi.append(base - 2 if low else base)
    elif g.family == "C":
        n = g.rank
        xi = []
        for v in U.vertices:
            base = (b - eps(v)) if even else (b - 1 + eps(v))
            xi.append(base - 2 if v == n + 1 else base)
    elif g.family == "F":
        if (b - g.eps(1)) % 2 == 0:
            xi = [b, b, b - 2, b - 1, b, b - 2]
        else:
            xi = [b - 1, b - 1, b - 3, b, b - 1, b - 3]
    else:
        if (b - g.eps(1)) % 2 == 0:
            xi = [b, b - 1, b - 2, b - 4]
        else:
            xi = [b - 1, b, b - 3, b - 5]
    return QDatum(g, xi)


@lru_cache(maxsize=None)
def height_functions(g) -> tuple:
    """All height functions up to translation (vertex 1 pinned at its
    parity value), by exhaustive search over edge differences."""
    g = lie_type(g)
    U = unfolding(g)
    delta = U.delta
    r = g.r
    order, parent = [1], {1: None}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in delta.neighbours(v):
            if u not in parent:
                parent[u] = v
                order.append(u)
                queue.append(u)
    cands = [x for x in range(-(2 * r - 1), 2 * r) if x]
    out = []
    xi = {1: g.eps(U.bar(1))}

    def rec(k):
        if k == len(order):
            q = QDatum(g, [xi[v] for v in U.vertices], check=False)
            if not validate_qdatum(q):
                out.append(q.xi)
            return
        v = order[k]
        base = xi[parent[v]]
        for c in cands:
            val = base + c
            if (val - g.eps(U.bar(v))) % 2:
                continue
            if U.d(v) == U.d(parent[v]) and abs(c) != U.d(v):
                continue
            xi[v] = val
            rec(k + 1)
        del xi[v]

    rec(1)
    return tuple(out)


def random_qdatum(g, rng=None) -> QDatum:
    """A random valid Q-datum, translated by a random even amount."""
    rng = rng or _random.Random()
    hs = height_functions(g)
    xi = rng.choice(hs)
    shift = 2 * rng.randint(-5, 5)
    return QDatum(g, [x + shift for x in xi])


@lru_cache(maxsize=None)
def _xi_bounds(g) -> dict:
    g = lie_type(g)
    U = unfolding(g)
    out = {}
    for xi in height_functions(g):
        for i in g.vertices:
            for j in g.vertices:
                best = max(xi[b - 1] - xi[a - 1] for a in U.orbit(i) for b in U.orbit(j))
                out[i, j] = max(out.get((i, j), best), best)
    return out


def xi_bound(g, i: int, j: int) -> int:
    """``Xi_ij``: the largest ``xi_b - xi_a`` over height functions and
    vertices ``a`` over ``i``, ``b`` over ``j``."""
    return _xi_bounds(lie_type(g))[i, j]


def tc_mismatches(q: QDatum, span: int = None) -> list:
    """Triples ``(i, j, u)`` with ``|u| <= span`` (default ``2 r h^vee``)
    where ``c~_ij(u) - c~_ij(-u)`` differs from
    ``(varpi_a, tau^{(u + xi_b - xi_a - d_i)/2} gamma_b)``, ``a``, ``b`` the
    top vertices over ``i``, ``j``.  The pairing side is zero off the
    parity lattice."""
    G = q.g
    R = root_system(q.delta)
    span = 2 * q.rh if span is None else span
    bad = []
    for i in G.vertices:
        a = q.top_vertex(i)
        for j in G.vertices:
            b = q.top_vertex(j)
            for u in range(-span, span + 1):
                lhs = tilde_c(G, i, j, u) - tilde_c(G, i, j, -u)
                e = u + q.h(b) - q.h(a) - G.di(i)
                if e % 2:
                    rhs = 0
                else:
                    rhs = R.pairing(R.varpi(a), (q.tau ** (e // 2))(q.gamma_varpi(b)))
                if lhs != rhs:
                    bad.append((i, j, u))
    return bad


def xi_lemma_violations(g, periods: int = 2) -> list:
    """``(i, j, u)`` with ``u = Xi_ij - d_i - 2 l d_ij`` and ``c~_ij(u) != 0``."""
    g = lie_type(g)
    bad = []
    for i in g.vertices:
        for j in g.vertices:
            X = xi_bound(g, i, j)
            for l in range(periods * g.rh):
                u = X - g.di(i) - 2 * l * g.dij(i, j)
                if tilde_c(g, i, j, u):
                    bad.append((i, j, u))
    return bad


def adapted_word(q: QDatum) -> tuple:
    """A reduced word for ``w0`` adapted to ``q``, with the heights at which
    each letter was reflected.  This reads the twisted AR quiver from the
    top: at each step the highest source still inside its window is
    reflected."""
    xi = list(q.xi)
    U = q.U
    floor = {v: q.h(q.vstar(v)) - q.rh for v in U.vertices}
    letters, heights = [], []
    for _ in range(len(q.ar_vertices)):
        srcs = [v for v in U.vertices if xi[v - 1] > floor[v]
                and all(xi[v - 1] > xi[u - 1] for u in U.neighbours(v))]
        if not srcs:
            raise RuntimeError(f"no admissible source while reading {q!r}")
        v = max(srcs, key=lambda v: (xi[v - 1], -v))
        letters.append(v)
        heights.append(xi[v - 1])
        xi[v - 1] -= 2 * U.d(v)
    return tuple(letters), tuple(heights)
