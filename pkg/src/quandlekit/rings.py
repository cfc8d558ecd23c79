"""Exact arithmetic in Z[A^{\\pm 1}] and its rack/kei quotients.

``LaurentPoly`` is the workhorse: an immutable Laurent polynomial with
exact coefficients, the coefficient ring of abelian quandles.  On top of
it sit the rack ring (elements ``p + q*E`` with ``E^2 = E*(1-A)``) and
the two involutary quotients where additionally ``A^2 = 1``.

Units of Z[A^{\\pm 1}] are ``+-A^k``; ``laurent_normalize`` fixes the
canonical associate (lowest exponent 0, positive lowest coefficient).
"""

from __future__ import annotations

from fractions import Fraction
import re

from . import _kernel


def _canon_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """Immutable element of Z[A^{\\pm 1}].

    Stored as a map exponent -> nonzero coefficient; the zero polynomial
    is the empty map.  Coefficients are arbitrary-precision ints (the
    rational invariant-factor routines may produce exact ``Fraction``
    coefficients; integral values are always stored as ints).
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                v = _canon_coeff(v)
                if v != 0:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def A(cls, exponent: int = 1) -> "LaurentPoly":
        return cls({exponent: 1})

    @classmethod
    def const(cls, n) -> "LaurentPoly":
        return cls({0: n})

    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def coeff(self, exponent: int):
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def is_unit(self) -> bool:
        """True iff the polynomial is +-A^k."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if not self._c or not other._c:
            return LaurentPoly()
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            e = self.min_exp()
            v = 1 if (self._c[e] == 1 or n % 2 == 0) else -1
            return LaurentPoly({n * e: v})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def to_dense(self) -> tuple[int, list]:
        """(low, coeffs) pair used by the determinant kernel."""
        if not self._c:
            return 0, []
        lo = self.min_exp()
        hi = self.max_exp()
        out = [0] * (hi - lo + 1)
        for e, v in self._c.items():
            out[e - lo] = v
        return lo, out

    @classmethod
    def from_dense(cls, low: int, coeffs: list) -> "LaurentPoly":
        return cls({low + i: v for i, v in enumerate(coeffs) if v != 0})

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into LaurentPoly")


A = LaurentPoly.A()
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def laurent_eval(p: LaurentPoly, a) -> Fraction:
    """Exact evaluation at a nonzero rational (A is invertible)."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("cannot evaluate at A = 0: A is a unit")
    total = Fraction(0)
    for e, v in p._c.items():
        total += Fraction(v) * a ** e
    return total


def laurent_normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate: lowest exponent 0, positive lowest coefficient."""
    if p.is_zero():
        return p
    lo = p.min_exp()
    sign = 1 if p.coeff(lo) > 0 else -1
    return LaurentPoly({e - lo: sign * v for e, v in p._c.items()})


def laurent_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient a/b in Z[A^{\\pm 1}]; raises ValueError otherwise."""
    al, ac = a.to_dense()
    bl, bc = b.to_dense()
    low, coeffs = _kernel.poly_divexact(al, ac, bl, bc)
    return LaurentPoly.from_dense(low, coeffs)


def laurent_divides(b: LaurentPoly, a: LaurentPoly) -> bool:
    if b.is_zero():
        return a.is_zero()
    try:
        laurent_divexact(a, b)
        return True
    except ValueError:
        return False


def _content(p: LaurentPoly) -> int:
    from math import gcd

    g = 0
    for v in p._c.values():
        g = gcd(g, abs(v))
    return g


def _primitive(p: LaurentPoly) -> LaurentPoly:
    c = _content(p)
    if c <= 1:
        return laurent_normalize(p)
    return laurent_normalize(LaurentPoly({e: v // c for e, v in p._c.items()}))


def _gcd_primitive(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    # Euclid over Q[A] on primitive parts, then restore primitivity
    # (Gauss: the primitive gcd is the gcd in Z[A^{\pm 1}] up to content).
    fa = {e: Fraction(v) for e, v in laurent_normalize(a)._c.items()}
    fb = {e: Fraction(v) for e, v in laurent_normalize(b)._c.items()}

    def deg(f):
        return max(f) if f else -1

    def divmod_q(f, g):
        f = dict(f)
        dg = deg(g)
        lead = g[dg]
        while f and deg(f) >= dg:
            df = deg(f)
            q = f[df] / lead
            for e, v in g.items():
                e2 = e + df - dg
                nv = f.get(e2, Fraction(0)) - q * v
                if nv:
                    f[e2] = nv
                else:
                    f.pop(e2, None)
        return f

    while fb:
        fa, fb = fb, divmod_q(fa, fb)
    # clear denominators and make primitive
    from math import lcm

    den = lcm(*(v.denominator for v in fa.values())) if fa else 1
    return _primitive(LaurentPoly({e: int(v * den) for e, v in fa.items()}))


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A gcd in Z[A^{\\pm 1}], in the canonical unit normalization.

    gcd = gcd(contents) * gcd(primitive parts); gcd(p, 0) = normalize(p)
    and gcd(0, 0) = 0 by convention.
    """
    from math import gcd as igcd

    if a.is_zero():
        return laurent_normalize(b)
    if b.is_zero():
        return laurent_normalize(a)
    c = igcd(_content(a), _content(b))
    pp = _gcd_primitive(a, b)
    return laurent_normalize(LaurentPoly.const(c) * pp)


def laurent_mirror(p: LaurentPoly) -> LaurentPoly:
    """Substitute A -> A^{-1}."""
    return LaurentPoly({-e: v for e, v in p._c.items()})


# ---------------------------------------------------------------------------
# textual format: sum of terms c*A^k, e.g. "1 - A + A^2", "A^-1 - 2*A"

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<var1>A(?:\^(?P<exp1>-?\d+))?))?
          | (?P<var2>A(?:\^(?P<exp2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the textual polynomial format (inverse of ``format_poly``)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return LaurentPoly.zero()
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed polynomial at {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- before {s[pos:]!r}")
        sgn = -1 if sign == "-" else 1
        coeff = m.group("coeff")
        var = m.group("var1") or m.group("var2")
        exp = m.group("exp1") or m.group("exp2")
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        e = 0
        if var is not None:
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + sgn * c
        pos = m.end()
        first = False
    return LaurentPoly(coeffs)


def format_poly(p: LaurentPoly) -> str:
    """Render as a sum of c*A^k terms in increasing exponent order."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p._c):
        v = p._c[e]
        neg = v < 0
        mag = -v if neg else v
        if e == 0:
            body = str(mag)
        else:
            pw = "A" if e == 1 else f"A^{e}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# the rack ring Z[A^{\pm 1}, E] / (E^2 - E(1-A))


class RackRingElem:
    """Element ``p + q*E`` of the rack ring, in normal form.

    The defining relation ``E^2 = E*(1-A)`` makes {1, E} a basis over
    Z[A^{\\pm 1}], so the pair (p, q) is unique.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: LaurentPoly, q: LaurentPoly = ZERO):
        self.p = _coerce(p)
        self.q = _coerce(q)

    @classmethod
    def E(cls) -> "RackRingElem":
        return cls(ZERO, ONE)

    def __eq__(self, other):
        if not isinstance(other, RackRingElem):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __add__(self, other):
        return RackRingElem(self.p + other.p, self.q + other.q)

    def __neg__(self):
        return RackRingElem(-self.p, -self.q)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return rackring_mul(self, other)

    def subst_e(self) -> LaurentPoly:
        """Image in Z[A^{\\pm 1}] under E -> 1 - A (the quandle quotient)."""
        return self.p + self.q * (ONE - A)

    def __repr__(self):
        return f"RackRingElem({format_poly(self.p)!r} + ({format_poly(self.q)!r})E)"


def rackring_mul(u: RackRingElem, v: RackRingElem) -> RackRingElem:
    """(p1 + q1 E)(p2 + q2 E) with E^2 reduced to E(1-A)."""
    p = u.p * v.p
    q = u.p * v.q + u.q * v.p + u.q * v.q * (ONE - A)
    return RackRingElem(p, q)


# ---------------------------------------------------------------------------
# involutary quotients: Z[A]/(A^2-1), optionally extended by E


def _red2(p: LaurentPoly) -> tuple:
    """Reduce mod A^2 - 1 to (a0, a1)."""
    a0 = 0
    a1 = 0
    for e, v in p._c.items():
        if e % 2 == 0:
            a0 += v
        else:
            a1 += v
    return a0, a1


class KeiRingElem:
    """Element of the kei ring Z[A]/(A^2-1), or of its E-extension.

    ``extended=False`` models the kei ring itself (q part must vanish);
    ``extended=True`` adds E with the rack relation, everything reduced
    mod A^2 - 1.
    """

    __slots__ = ("a0", "a1", "q0", "q1", "extended")

    def __init__(self, a0: int, a1: int = 0, q0: int = 0, q1: int = 0,
                 extended: bool = False):
        if not extended and (q0 or q1):
            raise ValueError("kei ring has no E part; use extended=True")
        self.a0 = a0
        self.a1 = a1
        self.q0 = q0
        self.q1 = q1
        self.extended = extended

    @classmethod
    def from_poly(cls, p: LaurentPoly, q: LaurentPoly = ZERO,
                  extended: bool = False) -> "KeiRingElem":
        a0, a1 = _red2(p)
        q0, q1 = _red2(q)
        return cls(a0, a1, q0, q1, extended)

    def __eq__(self, other):
        if not isinstance(other, KeiRingElem):
            return NotImplemented
        return (self.extended == other.extended
                and (self.a0, self.a1, self.q0, self.q1)
                == (other.a0, other.a1, other.q0, other.q1))

    def __hash__(self):
        return hash((self.a0, self.a1, self.q0, self.q1, self.extended))

    def __add__(self, other):
        self._check(other)
        return KeiRingElem(self.a0 + other.a0, self.a1 + other.a1,
                           self.q0 + other.q0, self.q1 + other.q1,
                           self.extended)

    def __neg__(self):
        return KeiRingElem(-self.a0, -self.a1, -self.q0, -self.q1,
                           self.extended)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return keiring_mul(self, other)

    def _check(self, other):
        if self.extended != other.extended:
            raise ValueError("mixed kei-ring quotients")

    def __repr__(self):
        s = f"{self.a0} + {self.a1}*A"
        if self.extended:
            s += f" + ({self.q0} + {self.q1}*A)E"
        return f"KeiRingElem({s})"


def keiring_mul(u: KeiRingElem, v: KeiRingElem) -> KeiRingElem:
    """Product reduced mod A^2-1 (and mod E^2 - E(1-A) when extended)."""
    u._check(v)

    def mul2(x, y):
        # (x0 + x1 A)(y0 + y1 A) mod A^2 - 1
        return (x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def add2(x, y):
        return (x[0] + y[0], x[1] + y[1])

    p1, q1 = (u.a0, u.a1), (u.q0, u.q1)
    p2, q2 = (v.a0, v.a1), (v.q0, v.q1)
    p = mul2(p1, p2)
    if not u.extended:
        return KeiRingElem(p[0], p[1])
    one_minus_a = (1, -1)
    q = add2(add2(mul2(p1, q2), mul2(q1, p2)), mul2(mul2(q1, q2), one_minus_a))
    return KeiRingElem(p[0], p[1], q[0], q[1], extended=True)
