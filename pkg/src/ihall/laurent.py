"""Exact coefficient arithmetic.

Three small rings cover everything the algebras need:

* ``LaurentHalf`` -- Laurent polynomials in v with exponents in (1/2)Z and
  integer coefficients.  Exponents are stored doubled, so the key ``k``
  holds the coefficient of v^(k/2) and all bookkeeping stays integral.
* ``QPoly`` -- ordinary integer polynomials in q (counting polynomials).
* ``LaurentFrac`` -- quotients of two LaurentHalf values, only used inside
  the generator-expansion elimination.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentHalf:
    """Z[v^(1/2), v^(-1/2)] with doubled-exponent dict storage."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        # mapping doubled exponent -> nonzero int coefficient
        self.c = {k: v for k, v in (coeffs or {}).items() if v}

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero():
        return LaurentHalf()

    @staticmethod
    def one():
        return LaurentHalf({0: 1})

    @staticmethod
    def term(coeff, doubled_exp=0):
        """coeff * v^(doubled_exp / 2)."""
        return LaurentHalf({doubled_exp: coeff} if coeff else {})

    @staticmethod
    def v_pow(doubled_exp):
        """v^(doubled_exp / 2)."""
        return LaurentHalf({doubled_exp: 1})

    # -- structure -----------------------------------------------------

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == {0: 1}

    def is_monomial(self):
        return len(self.c) == 1

    def integral_exponents(self):
        """True when only integer powers of v occur."""
        return all(k % 2 == 0 for k in self.c)

    def in_z_vminus(self):
        """Membership in v^(-1) Z[v^(-1)]: integer exponents, all negative."""
        return all(k % 2 == 0 and k < 0 for k in self.c)

    def support(self):
        return sorted(self.c)

    def key(self):
        """Hashable canonical form."""
        return tuple(sorted(self.c.items()))

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        return r

    def __sub__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) - v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        return r

    def __neg__(self):
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = {k: -v for k, v in self.c.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentHalf()
            r = LaurentHalf.__new__(LaurentHalf)
            r.c = {k: v * other for k, v in self.c.items()}
            return r
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                s = out.get(k, 0) + va * vb
                if s:
                    out[k] = s
                else:
                    del out[k]
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a LaurentHalf")
        out = LaurentHalf.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, doubled_exp):
        """Multiply by v^(doubled_exp / 2)."""
        if not doubled_exp:
            return self
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = {k + doubled_exp: v for k, v in self.c.items()}
        return r

    def conj(self):
        """Bar conjugation v^(1/2) -> v^(-1/2)."""
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = {-k: v for k, v in self.c.items()}
        return r

    def __eq__(self, other):
        return isinstance(other, LaurentHalf) and self.c == other.c

    def __hash__(self):
        return hash(self.key())

    # -- division ------------------------------------------------------

    def exact_div(self, other):
        """Exact quotient self / other; raises ValueError if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero LaurentHalf")
        if self.is_zero():
            return LaurentHalf()
        if other.is_monomial():
            (k, v), = other.c.items()
            if any(c % v for c in self.c.values()):
                raise ValueError("not divisible (monomial content)")
            r = LaurentHalf.__new__(LaurentHalf)
            r.c = {kk - k: cc // v for kk, cc in self.c.items()}
            return r
        # shift both to ordinary polynomials in x = v^(1/2) and long-divide
        num, noff = self._as_poly()
        den, doff = other._as_poly()
        q, rem = _poly_divmod_exact(num, den)
        if rem is None:
            raise ValueError("not divisible")
        out = {}
        for i, cv in enumerate(q):
            if cv:
                out[i + noff - doff] = cv
        r = LaurentHalf.__new__(LaurentHalf)
        r.c = out
        return r

    def _as_poly(self):
        """Dense coefficient list in x = v^(1/2) plus the exponent offset."""
        lo = min(self.c)
        hi = max(self.c)
        dense = [0] * (hi - lo + 1)
        for k, v in self.c.items():
            dense[k - lo] = v
        return dense, lo

    # -- evaluation ----------------------------------------------------

    def eval_zq(self, q):
        """Evaluate at v = sqrt(q), exactly, as a + b*sqrt(q).

        Requires integral v-exponents (doubled exponents even); structure
        constants always satisfy this.  Returns a pair of Fractions.
        """
        a = Fraction(0)
        b = Fraction(0)
        for k, v in self.c.items():
            if k % 2:
                raise ValueError("half-integral v-power has no value in Z[sqrt q]")
            e = k // 2  # power of v = sqrt(q)^e
            if e % 2 == 0:
                a += v * Fraction(q) ** (e // 2)
            else:
                b += v * Fraction(q) ** ((e - 1) // 2)
        return a, b

    def eval_float(self, v):
        return sum(c * float(v) ** (k / 2.0) for k, c in self.c.items())

    # -- display -------------------------------------------------------

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for k in sorted(self.c, reverse=True):
            c = self.c[k]
            if k == 0:
                bits.append(f"{c:+d}")
            else:
                e = f"v^({k}/2)" if k % 2 else ("v" if k == 2 else f"v^{k//2}")
                if c == 1:
                    bits.append(f"+{e}")
                elif c == -1:
                    bits.append(f"-{e}")
                else:
                    bits.append(f"{c:+d}*{e}")
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s


VZERO = LaurentHalf.zero()
VONE = LaurentHalf.one()
V = LaurentHalf.v_pow(2)
VINV = LaurentHalf.v_pow(-2)
VHALF = LaurentHalf.v_pow(1)


def _poly_divmod_exact(num, den):
    """Divide dense integer polynomials; return (quotient, []) or (None, None).

    Exactness means remainder zero with integer quotient coefficients.
    """
    num = list(num)
    dn = len(den) - 1
    while dn >= 0 and den[dn] == 0:
        dn -= 1
    lead = den[dn]
    q = [0] * max(0, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % lead:
            return None, None
        f = c // lead
        q[i - dn] = f
        for j in range(dn + 1):
            num[i - dn + j] -= f * den[j]
    if any(num):
        return None, None
    return q, []


def gauss_binomial(n, k, q):
    """Number of k-dim subspaces of F_q^n, as an integer."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def qbinom(n, r):
    """Quantum binomial [n choose r] in Z[v, v^(-1)]."""
    num = VONE
    den = VONE
    for i in range(r):
        num = num * _qint(n - i)
        den = den * _qint(i + 1)
    return num.exact_div(den)


def _qint(r):
    """[r] = (v^r - v^-r)/(v - v^-1)."""
    return LaurentHalf({2 * (r - 1 - 2 * i): 1 for i in range(r)})


class QPoly:
    """Integer polynomial in the counting variable q, dense little-endian."""

    __slots__ = ("a",)

    def __init__(self, coeffs=()):
        a = list(coeffs)
        while a and a[-1] == 0:
            a.pop()
        self.a = a

    @staticmethod
    def const(n):
        return QPoly([n])

    @staticmethod
    def q_power(e):
        return QPoly([0] * e + [1])

    def is_zero(self):
        return not self.a

    def degree(self):
        return len(self.a) - 1

    def __add__(self, other):
        n = max(len(self.a), len(other.a))
        return QPoly([(self.a[i] if i < len(self.a) else 0)
                      + (other.a[i] if i < len(other.a) else 0) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.a), len(other.a))
        return QPoly([(self.a[i] if i < len(self.a) else 0)
                      - (other.a[i] if i < len(other.a) else 0) for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([c * other for c in self.a])
        if not self.a or not other.a:
            return QPoly()
        out = [0] * (len(self.a) + len(other.a) - 1)
        for i, ci in enumerate(self.a):
            if ci:
                for j, cj in enumerate(other.a):
                    out[i + j] += ci * cj
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.a == other.a

    def __hash__(self):
        return hash(tuple(self.a))

    def __call__(self, q):
        out = 0
        for c in reversed(self.a):
            out = out * q + c
        return out

    def exact_div(self, other):
        q, rem = _poly_divmod_exact(self.a or [0], other.a)
        if rem is None:
            raise ValueError("inexact QPoly division")
        return QPoly(q)

    def to_laurent(self):
        """Substitute q = v^2."""
        return LaurentHalf({4 * i: c for i, c in enumerate(self.a) if c})

    def __repr__(self):
        if not self.a:
            return "0"
        bits = []
        for i in range(len(self.a) - 1, -1, -1):
            c = self.a[i]
            if not c:
                continue
            t = "1" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if i and abs(c) == 1:
                bits.append(("+" if c > 0 else "-") + t)
            elif i:
                bits.append(f"{c:+d}*{t}")
            else:
                bits.append(f"{c:+d}")
        s = "".join(bits)
        return s[1:] if s.startswith("+") else s


def interpolate_qpoly(points):
    """The unique integer polynomial through (q, value) pairs.

    Lagrange interpolation over Q; raises ValueError when the result is not
    an integer polynomial (a stabilization failure upstream).
    """
    xs = [p[0] for p in points]
    ys = [Fraction(p[1]) for p in points]
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # basis poly prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis  # multiply by x
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        w = ys[i] / denom
        for t in range(len(basis)):
            coeffs[t] += w * basis[t]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("interpolation produced non-integer coefficients")
        out.append(int(c))
    return QPoly(out)


def _content(poly):
    from math import gcd
    g = 0
    for c in poly.c.values():
        g = gcd(g, abs(c))
    return g or 1


def _poly_gcd_int(a, b):
    """gcd of dense integer polynomials, primitive, via rational Euclid."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]

    def deg(p):
        d = len(p) - 1
        while d >= 0 and p[d] == 0:
            d -= 1
        return d

    while deg(fb) >= 0:
        da, db = deg(fa), deg(fb)
        if da < db:
            fa, fb = fb, fa
            continue
        lead = fb[deg(fb)]
        f = fa[da] / lead
        for j in range(db + 1):
            fa[da - db + j] -= f * fb[j]
        if deg(fa) < deg(fb):
            fa, fb = fb, fa
    d = deg(fa)
    if d < 0:
        return [1]
    from math import gcd as igcd, lcm
    denom = 1
    for c in fa[: d + 1]:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in fa[: d + 1]]
    g = 0
    for c in ints:
        g = igcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


class LaurentFrac:
    """Quotient of LaurentHalf values, normalized lazily.

    Only the generator-expansion elimination needs this; the denominator is
    1 in the common case and all public algebra outputs are checked back
    into LaurentHalf.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = VONE
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def from_laurent(x):
        return LaurentFrac(x, VONE)

    def is_zero(self):
        return self.num.is_zero()

    def _normalize(self):
        if self.den.is_one() or self.num.is_zero():
            if self.num.is_zero():
                self.den = VONE
            return self
        # strip the v-power and content of the denominator when possible
        try:
            self.num = self.num.exact_div(self.den)
            self.den = VONE
            return self
        except ValueError:
            pass
        a, aoff = self.num._as_poly()
        b, boff = self.den._as_poly()
        g = _poly_gcd_int(a, b)
        if len(g) > 1 or g[0] != 1:
            gl = LaurentHalf({i: c for i, c in enumerate(g) if c})
            self.num = self.num.exact_div(gl)
            self.den = self.den.exact_div(gl)
        # pull the denominator's trailing monomial into the numerator
        lo = min(self.den.c)
        if lo:
            self.num = self.num.shifted(-lo)
            self.den = self.den.shifted(-lo)
        from math import gcd
        cg = gcd(_content(self.num), _content(self.den))
        if cg > 1:
            self.num = self.num.exact_div(LaurentHalf({0: cg}))
            self.den = self.den.exact_div(LaurentHalf({0: cg}))
        if self.den.c.get(max(self.den.c), 0) < 0:
            self.num = -self.num
            self.den = -self.den
        return self

    def __add__(self, other):
        if self.den == other.den:
            return LaurentFrac(self.num + other.num, self.den)._normalize()
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)._normalize()

    def __sub__(self, other):
        if self.den == other.den:
            return LaurentFrac(self.num - other.num, self.den)._normalize()
        return LaurentFrac(self.num * other.den - other.num * self.den,
                           self.den * other.den)._normalize()

    def __neg__(self):
        return LaurentFrac(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, LaurentHalf):
            other = LaurentFrac(other)
        return LaurentFrac(self.num * other.num, self.den * other.den)._normalize()

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverting zero")
        return LaurentFrac(self.den, self.num)._normalize()

    def __truediv__(self, other):
        return self * other.inv()

    def conj(self):
        return LaurentFrac(self.num.conj(), self.den.conj())._normalize()

    def __eq__(self, other):
        return (self.num * other.den) == (other.num * self.den)

    def as_laurent(self):
        """Back into LaurentHalf; raises ValueError when not integral."""
        self._normalize()
        if self.den.is_one():
            return self.num
        return self.num.exact_div(self.den)

    def __repr__(self):
        self._normalize()
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"
