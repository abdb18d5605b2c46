"""
The quantum torus ``Y_t`` in the basis of commutative monomials.

Elements are finite sums ``sum_m c_m(t) underline(m)`` where ``underline(m)``
is the bar-invariant rescaling of the ordered product of the generators
``Y~_{i,p}``.  Products follow

    underline(m) * underline(m') = t^{N(m,m')/2} underline(m m')

so multiplication, bar and specialization at ``t = 1`` never leave this
basis.  Coefficients live in ``Z[t^{1/2}, t^{-1/2}]``; exponents of
``t^{1/2}`` are stored as integers (``{3: 1}`` is ``t^{3/2}``).
"""
from __future__ import annotations

import json
import re
from functools import lru_cache

from .liealg import LieType, lie_type, star, tilde_c

__all__ = [
    "Monomial",
    "MonomialParseError",
    "TCoeff",
    "QTElement",
    "QuantumTorus",
    "quantum_torus",
    "Y",
    "nn",
    "a_monomial",
    "nakajima_leq",
    "frakD",
    "omega_star",
    "truncate",
    "to_json",
    "from_json",
    "to_text",
    "from_text",
]


# -- monomials ---------------------------------------------------------------

class MonomialParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*Y\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?)?\s*")


class Monomial:
    """A Laurent monomial ``prod Y_{i,p}^{u_{i,p}}`` (immutable, hashable)."""

    __slots__ = ("_items", "_hash", "_d")

    def __init__(self, exps=()):
        d = {}
        for k, e in (exps.items() if hasattr(exps, "items") else exps):
            if e:
                k = (int(k[0]), int(k[1]))
                d[k] = d.get(k, 0) + e
                if not d[k]:
                    del d[k]
        self._items = tuple(sorted(d.items()))
        self._d = dict(self._items)
        self._hash = hash(self._items)

    @classmethod
    def _raw(cls, d):
        m = object.__new__(cls)
        m._items = tuple(sorted(d.items()))
        m._d = dict(m._items)
        m._hash = hash(m._items)
        return m

    @classmethod
    def parse(cls, s: str) -> "Monomial":
        """Parse ``"Y[1,0]Y[1,2]^-1"``; ``"1"`` and ``""`` are the unit."""
        if s.strip() in ("1", ""):
            return ONE
        pos, out = 0, {}
        while pos < len(s):
            mt = _TOKEN.match(s, pos)
            if not mt or mt.end() == pos:
                raise MonomialParseError(f"unexpected {s[pos:pos + 8]!r}", pos)
            k = (int(mt.group(1)), int(mt.group(2)))
            out[k] = out.get(k, 0) + int(mt.group(3) or 1)
            pos = mt.end()
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def __bool__(self):
        return True

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._d)

    def items(self):
        return self._items

    def __getitem__(self, key) -> int:
        return self._d.get(key, 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self._d)
        for k, e in other._items:
            v = d.get(k, 0) + e
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Monomial._raw(d)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return ONE
        return Monomial._raw({key: e * k for key, e in self._items})

    def inverse(self) -> "Monomial":
        return Monomial._raw({k: -e for k, e in self._items})

    def is_one(self) -> bool:
        return not self._items

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self._items)

    def is_antidominant(self) -> bool:
        return all(e < 0 for _, e in self._items)

    def is_i_dominant(self, i: int) -> bool:
        return all(e > 0 for (j, _), e in self._items if j == i)

    def i_part(self, i: int) -> "Monomial":
        return Monomial._raw({k: e for k, e in self._items if k[0] == i})

    def params(self):
        return [p for (_, p) in self._d]

    def map_vars(self, f) -> "Monomial":
        """Image under a substitution ``(i,p) -> (j,s)`` of variables."""
        return Monomial((f(k), e) for k, e in self._items)

    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def __repr__(self):
        return f"Monomial({str(self)!r})"

    def __str__(self):
        if not self._items:
            return "1"
        return "".join(f"Y[{i},{p}]" + ("" if e == 1 else f"^{e}")
                       for (i, p), e in self._items)

    def key(self) -> str:
        return str(self)


ONE = Monomial()


def Y(i: int, p: int, e: int = 1) -> Monomial:
    return Monomial({(i, p): e})


# -- coefficients ------------------------------------------------------------

_COEFF_TERM = re.compile(
    r"(?P<sign>[+-]?)(?:(?:(?P<c>\d+)\*)?(?P<t>t)(?:\^(?:\((?P<half>-?\d+)/2\)|(?P<full>-?\d+)))?|(?P<const>\d+))")


class TCoeff:
    """A Laurent polynomial in ``t^{1/2}``; keys are doubled exponents."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        if d is None:
            d = {}
        elif isinstance(d, int):
            d = {0: d} if d else {}
        else:
            d = {int(k): int(v) for k, v in d.items() if v}
        self.d = d

    @classmethod
    def parse(cls, s: str) -> "TCoeff":
        """Inverse of ``str``: ``"2*t^3 - t^(1/2) + 1"``."""
        s = s.replace(" ", "")
        if s in ("", "0"):
            return cls()
        d = {}
        pos = 0
        while pos < len(s):
            mt = _COEFF_TERM.match(s, pos)
            if not mt or mt.end() == pos:
                raise ValueError(f"bad coefficient {s!r} at position {pos}")
            sign = -1 if mt.group("sign") == "-" else 1
            if mt.group("t"):
                c = int(mt.group("c") or 1)
                if mt.group("half") is not None:
                    k = int(mt.group("half"))
                elif mt.group("full") is not None:
                    k = 2 * int(mt.group("full"))
                else:
                    k = 2
            else:
                c, k = int(mt.group("const")), 0
            d[k] = d.get(k, 0) + sign * c
            pos = mt.end()
        return cls(d)

    @classmethod
    def t(cls, half_exp: int, c: int = 1) -> "TCoeff":
        """``c t^{half_exp / 2}``."""
        return cls({half_exp: c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = TCoeff(other)
        return isinstance(other, TCoeff) and self.d == other.d

    def __hash__(self):
        return hash(tuple(sorted(self.d.items())))

    def __bool__(self):
        return bool(self.d)

    def __add__(self, other):
        if isinstance(other, int):
            other = TCoeff(other)
        d = dict(self.d)
        for k, v in other.d.items():
            s = d.get(k, 0) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return TCoeff._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return TCoeff._wrap({k: -v for k, v in self.d.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TCoeff(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TCoeff._wrap({k: v * other for k, v in self.d.items()} if other else {})
        d = {}
        for a, x in self.d.items():
            for b, y in other.d.items():
                d[a + b] = d.get(a + b, 0) + x * y
        return TCoeff._wrap({k: v for k, v in d.items() if v})

    __rmul__ = __mul__

    @staticmethod
    def _wrap(d):
        c = object.__new__(TCoeff)
        c.d = d
        return c

    def shift(self, half_exp: int) -> "TCoeff":
        """Multiply by ``t^{half_exp/2}``."""
        return TCoeff._wrap({k + half_exp: v for k, v in self.d.items()})

    def bar(self) -> "TCoeff":
        return TCoeff._wrap({-k: v for k, v in self.d.items()})

    def at_one(self) -> int:
        return sum(self.d.values())

    def is_bar_invariant(self) -> bool:
        return all(self.d.get(-k) == v for k, v in self.d.items())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self.d.values())

    def degrees(self):
        return sorted(self.d)

    def __repr__(self):
        return f"TCoeff({self.d})"

    def __str__(self):
        if not self.d:
            return "0"
        parts = []
        for k in sorted(self.d, reverse=True):
            v = self.d[k]
            if k == 0:
                mon = ""
            elif k % 2 == 0:
                mon = "t" if k == 2 else f"t^{k // 2}"
            else:
                mon = f"t^({k}/2)"
            if not mon:
                parts.append(str(v))
            elif v == 1:
                parts.append(mon)
            elif v == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{v}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


# -- the torus ---------------------------------------------------------------

class QuantumTorus:
    """Structure constants of ``Y_t`` for a Cartan type.

    ``parity`` shifts the lattice: variables ``Y_{i,p}`` need
    ``p = eps_i + parity`` mod 2.
    """

    def __init__(self, g, parity: int = 0):
        self.g = lie_type(g)
        self.parity = parity % 2
        self._pair_cache = {}

    def __repr__(self):
        return f"QuantumTorus({self.g.name})"

    # lattice
    def in_hat_I(self, i: int, p: int) -> bool:
        return 1 <= i <= self.g.rank and (p - self.g.eps(i) - self.parity) % 2 == 0

    def check(self, m: Monomial) -> Monomial:
        for (i, p) in m:
            if not self.in_hat_I(i, p):
                raise ValueError(f"Y[{i},{p}] violates the parity condition for {self.g.name}")
        return m

    # structure constants
    def nn(self, i: int, p: int, j: int, s: int) -> int:
        return _nn(self.g, i, j, p - s)

    def pair_with_var(self, m: Monomial, j: int, s: int) -> int:
        g = self.g
        return sum(e * _nn(g, i, j, p - s) for (i, p), e in m.items())

    def N(self, m: Monomial, mp: Monomial) -> int:
        g = self.g
        tot = 0
        for (i, p), e in m.items():
            for (j, s), f in mp.items():
                tot += e * f * _nn(g, i, j, p - s)
        return tot

    def a_monomial(self, i: int, p: int) -> Monomial:
        return a_monomial(self.g, i, p)

    # elements
    def element(self, terms=None) -> "QTElement":
        return QTElement(self, terms or {})

    def monomial(self, m, c=1) -> "QTElement":
        if isinstance(m, str):
            m = Monomial.parse(m)
        return QTElement(self, {m: TCoeff(c) if isinstance(c, int) else c})

    def one(self) -> "QTElement":
        return self.monomial(ONE)

    def scalar(self, c) -> "QTElement":
        return self.monomial(ONE, c)

    def t(self, half_exp: int) -> "QTElement":
        return self.monomial(ONE, TCoeff.t(half_exp))

    def generator(self, i: int, p: int, e: int = 1) -> "QTElement":
        return self.monomial(Y(i, p, e))

    def mul(self, a: "QTElement", b: "QTElement") -> "QTElement":
        g = self.g
        out = {}
        bt = b.terms
        items = [(mb, mb.items(), cb.d) for mb, cb in bt.items()]
        for ma, ca in a.terms.items():
            pw = {}
            mad = ma.items()
            for mb, mbi, cbd in items:
                n = 0
                for (j, s), f in mbi:
                    v = pw.get((j, s))
                    if v is None:
                        v = sum(e * _nn(g, i, j, p - s) for (i, p), e in mad)
                        pw[(j, s)] = v
                    n += f * v
                prod = ma * mb
                acc = out.get(prod)
                if acc is None:
                    acc = out[prod] = {}
                for x, cx in ca.d.items():
                    for y, cy in cbd.items():
                        k = x + y + n
                        acc[k] = acc.get(k, 0) + cx * cy
        terms = {}
        for m, acc in out.items():
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                terms[m] = TCoeff._wrap(acc)
        return QTElement(self, terms)

    def commutative_product(self, *ms) -> Monomial:
        out = ONE
        for m in ms:
            out = out * m
        return out


@lru_cache(maxsize=None)
def quantum_torus(g, parity: int = 0) -> QuantumTorus:
    return QuantumTorus(lie_type(g), parity)


@lru_cache(maxsize=None)
def _nn(g: LieType, i: int, j: int, x: int) -> int:
    d = g.di(i)
    return (tilde_c(g, i, j, x - d) - tilde_c(g, i, j, x + d)
            - tilde_c(g, i, j, -x - d) + tilde_c(g, i, j, -x + d))


def nn(g, i: int, p: int, j: int, s: int) -> int:
    """``N(i,p; j,s)``."""
    return _nn(lie_type(g), i, j, p - s)


def a_monomial(g, i: int, p: int) -> Monomial:
    """``A_{i,p}``."""
    g = lie_type(g)
    d = g.di(i)
    exps = {(i, p - d): 1, (i, p + d): 1}
    for j in g.neighbours(i):
        c = g.c(j, i)
        for s in range(c + 1, -c, 2):
            exps[(j, p + s)] = exps.get((j, p + s), 0) - 1
    return Monomial(exps)


def nakajima_leq(g, m: Monomial, mp: Monomial):
    """Whether ``m <= m'``; returns ``(ok, certificate)`` where the
    certificate maps ``(i,q)`` to the exponent of ``A_{i,q}`` in
    ``m^{-1} m'``."""
    g = lie_type(g)
    r = m.inverse() * mp
    if r.is_one():
        return True, {}
    top = max(r.params())
    cert = {}
    while not r.is_one():
        p0 = min(r.params())
        if p0 > top:
            return False, None
        for (i, p), e in r.items():
            if p != p0:
                continue
            if e < 0:
                return False, None
            q = p + g.di(i)
            cert[(i, q)] = cert.get((i, q), 0) + e
            r = r * a_monomial(g, i, q) ** (-e)
    return True, cert


def frakD(g, m: Monomial, k: int = 1) -> Monomial:
    """``D^k``: ``Y_{i,p} -> Y_{i^{k*}, p + k r h^vee}``."""
    g = lie_type(g)
    sh = k * g.rh
    if k % 2:
        return m.map_vars(lambda v: (star(g, v[0]), v[1] + sh))
    return m.map_vars(lambda v: (v[0], v[1] + sh))


def omega_star(g, m: Monomial) -> Monomial:
    """``Y_{i,p} -> Y_{i*, -p - r h^vee}``."""
    g = lie_type(g)
    return m.map_vars(lambda v: (star(g, v[0]), -v[1] - g.rh))


class QTElement:
    """An element of ``Y_t`` in the commutative-monomial basis."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms):
        self.torus = torus
        self.terms = {m: (c if isinstance(c, TCoeff) else TCoeff(c))
                      for m, c in terms.items()}
        self.terms = {m: c for m, c in self.terms.items() if c}

    @property
    def g(self):
        return self.torus.g

    def __repr__(self):
        return f"<QTElement {self.torus.g.name}: {len(self.terms)} terms>"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            cs = str(c)
            if cs == "1":
                parts.append(str(m))
            else:
                parts.append(f"({cs})*{m}" if not m.is_one() else f"({cs})")
        return " + ".join(parts)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.torus.scalar(other)
        return isinstance(other, QTElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, m) -> TCoeff:
        if isinstance(m, str):
            m = Monomial.parse(m)
        return self.terms.get(m, TCoeff())

    def monomials(self):
        return sorted(self.terms)

    def _coerce(self, other):
        if isinstance(other, QTElement):
            return other
        if isinstance(other, (int, TCoeff)):
            return self.torus.scalar(other)
        if isinstance(other, Monomial):
            return self.torus.monomial(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, TCoeff()) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QTElement(self.torus, out)

    __radd__ = __add__

    def __neg__(self):
        return QTElement(self.torus, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, TCoeff)):
            return QTElement(self.torus, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        return self.torus.mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, TCoeff)):
            return QTElement(self.torus, {m: c * other for m, c in self.terms.items()})
        return self._coerce(other).torus.mul(self._coerce(other), self)

    def __pow__(self, k: int):
        out = self.torus.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, half_exp: int) -> "QTElement":
        """Multiply by ``t^{half_exp/2}``."""
        return QTElement(self.torus, {m: c.shift(half_exp) for m, c in self.terms.items()})

    def bar(self) -> "QTElement":
        return QTElement(self.torus, {m: c.bar() for m, c in self.terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(c.is_bar_invariant() for c in self.terms.values())

    def at_one(self) -> dict:
        """Specialization ``t = 1`` as ``{Monomial: int}``."""
        out = {}
        for m, c in self.terms.items():
            v = c.at_one()
            if v:
                out[m] = v
        return out

    def dominant_monomials(self):
        return sorted(m for m in self.terms if m.is_dominant())

    def antidominant_monomials(self):
        return sorted(m for m in self.terms if m.is_antidominant())

    def map_monomials(self, f, bar: bool = False) -> "QTElement":
        out = {}
        for m, c in self.terms.items():
            m2 = f(m)
            out[m2] = out.get(m2, TCoeff()) + (c.bar() if bar else c)
        return QTElement(self.torus, out)

    def frakD(self, k: int = 1) -> "QTElement":
        return self.map_monomials(lambda m: frakD(self.g, m, k))

    def omega(self) -> "QTElement":
        return self.map_monomials(lambda m: m.map_vars(lambda v: (v[0], -v[1])).inverse(), bar=True)

    def truncate(self, bound) -> "QTElement":
        return truncate(self, bound)

    def t_degree_bounds(self):
        ks = [k for c in self.terms.values() for k in c.d]
        return (min(ks), max(ks)) if ks else (0, 0)


def truncate(x: QTElement, bound) -> QTElement:
    """Drop every monomial containing a variable outside ``I^_{<=xi}`` (for a
    Q-datum) or with parameter ``> b`` (for an integer ``b``)."""
    if isinstance(bound, int):
        keep = lambda i, p: p <= bound
    else:
        keep = bound.le_xi
    return QTElement(x.torus, {m: c for m, c in x.terms.items()
                               if all(keep(i, p) for (i, p) in m)})


def frakD_t(x: QTElement, k: int = 1) -> QTElement:
    return x.frakD(k)


def omega_t(x: QTElement) -> QTElement:
    return x.omega()


# -- JSON --------------------------------------------------------------------

def to_json(x: QTElement, header=None) -> str:
    recs = []
    for m in sorted(x.terms):
        c = x.terms[m]
        recs.append({
            "monomial": {f"Y[{i},{p}]": e for (i, p), e in m.items()},
            "coeff": {str(k): c.d[k] for k in sorted(c.d)},
        })
    if header is not None:
        return json.dumps({"header": header, "element": recs}, sort_keys=True)
    return json.dumps(recs, sort_keys=True)


def from_json(torus: QuantumTorus, s: str) -> QTElement:
    data = json.loads(s)
    if isinstance(data, dict):
        data = data["element"]
    terms = {}
    for rec in data:
        m = Monomial.parse("".join(f"{k}^{e}" for k, e in rec["monomial"].items()) or "1")
        terms[m] = TCoeff({int(k): v for k, v in rec["coeff"].items()})
    return QTElement(torus, terms)


def to_text(x: QTElement) -> str:
    """One term per line: coefficient, then the monomial, aligned."""
    rows = [(str(x.terms[m]), str(m)) for m in sorted(x.terms)]
    w = max((len(c) for c, _ in rows), default=0)
    return "\n".join(f"{c.rjust(w)}  {m}" for c, m in rows) + ("\n" if rows else "")


def from_text(torus: QuantumTorus, s: str) -> QTElement:
    terms = {}
    for line in s.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        c, m = line.rstrip().rsplit(None, 1) if " " in line.strip() else ("1", line.strip())
        terms[Monomial.parse(m)] = TCoeff.parse(c)
    return QTElement(torus, terms)
