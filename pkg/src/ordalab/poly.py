"""Integer polynomials and the ordered field of rational functions.

Polynomials are tuples of int coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).  A RatFunc is a
canonical quotient: contents reduced jointly, primitive parts coprime, and
the denominator's leading coefficient positive.  The order makes the
indeterminate larger than every rational constant: a quotient is positive
exactly when its numerator and denominator have leading coefficients of the
same sign.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Poly = tuple  # int coefficients, ascending, no trailing zeros


def poly(coeffs) -> Poly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs)


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def poly_scale(p: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def poly_degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def poly_lead(p: Poly) -> int:
    return p[-1] if p else 0


def poly_content(p: Poly) -> int:
    c = 0
    for a in p:
        c = gcd(c, abs(a))
    return c


def poly_primitive(p: Poly) -> Poly:
    c = poly_content(p)
    if c in (0, 1):
        return p
    return tuple(a // c for a in p)


def _poly_divmod_frac(p, q):
    # division over the rationals; p, q are tuples of Fractions, q nonzero
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [Fraction(0)] * max(0, len(p) - dq)
    while len(p) - 1 >= dq and any(p):
        while p and p[-1] == 0:
            p.pop()
        if len(p) - 1 < dq:
            break
        shift = len(p) - 1 - dq
        c = p[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p.pop()
    while p and p[-1] == 0:
        p.pop()
    return quo, p


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient."""
    a = tuple(Fraction(c) for c in poly_primitive(p))
    b = tuple(Fraction(c) for c in poly_primitive(q))
    while b:
        _, r = _poly_divmod_frac(a, b)
        a, b = b, tuple(r)
    if not a:
        return ()
    # clear denominators, reduce to a primitive integer polynomial
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = poly(c.numerator * (den // c.denominator) for c in a)
    ints = poly_primitive(ints)
    if poly_lead(ints) < 0:
        ints = poly_neg(ints)
    return ints


def poly_div_exact(p: Poly, q: Poly) -> Poly:
    quo, rem = _poly_divmod_frac(tuple(Fraction(c) for c in p), tuple(Fraction(c) for c in q))
    if rem:
        raise ValueError("polynomial division is not exact")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ValueError("polynomial quotient is not integral")
        out.append(c.numerator)
    return poly(out)


def poly_str(p: Poly, var: str = "X") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            head = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{head}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class RatFunc:
    """Canonical quotient of integer polynomials, totally ordered."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            raise TypeError("nested quotients are built with arithmetic, not the constructor")
        num = poly(num if not isinstance(num, int) else (num,))
        den = poly(den if not isinstance(den, int) else (den,))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            object.__setattr__(self, "num", ())
            object.__setattr__(self, "den", (1,))
            return
        cn, cd = poly_content(num), poly_content(den)
        pn, pd = poly_primitive(num), poly_primitive(den)
        g = poly_gcd(pn, pd)
        if g != (1,):
            pn = poly_div_exact(pn, g)
            pd = poly_div_exact(pd, g)
        c = Fraction(cn, cd)
        num = poly_scale(pn, c.numerator)
        den = poly_scale(pd, c.denominator)
        if poly_lead(den) < 0:
            num, den = poly_neg(num), poly_neg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_fraction(cls, q) -> "RatFunc":
        q = Fraction(q)
        return cls((q.numerator,), (q.denominator,))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(poly_neg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = RatFunc((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- order ----------------------------------------------------------
    def sign(self) -> int:
        # denominator lead is positive by canonical form
        lead = poly_lead(self.num)
        return (lead > 0) - (lead < 0)

    def _cmp_sign(self, other) -> int:
        # sign of self - other without full canonicalization
        diff = poly_sub(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        lead = poly_lead(diff)
        return (lead > 0) - (lead < 0)

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_sign(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_sign(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_sign(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_sign(other) >= 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- rendering ------------------------------------------------------
    def __str__(self):
        if self.den == (1,):
            return poly_str(self.num)
        num_s = poly_str(self.num)
        den_s = poly_str(self.den)
        if _needs_parens(self.num):
            num_s = f"({num_s})"
        if _needs_parens(self.den):
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def _needs_parens(p: Poly) -> bool:
    terms = sum(1 for c in p if c != 0)
    return terms > 1 or poly_lead(p) < 0


def _coerce(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, int):
        return RatFunc((value,))
    if isinstance(value, Fraction):
        return RatFunc.from_fraction(value)
    return NotImplemented


RF_ZERO = RatFunc(())
RF_ONE = RatFunc((1,))
X = RatFunc((0, 1))
