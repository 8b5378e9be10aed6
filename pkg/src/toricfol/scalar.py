"""Exact scalars over Q and a real quadratic field Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  Irrational elements
of Q(sqrt(d)) are :class:`QuadScalar` instances; every operation that
produces a zero surd part collapses back to a ``Fraction``, so purely
rational computations never pay for the extension.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union


class DiscriminantError(ValueError):
    """Two scalars from different quadratic fields met in one operation."""


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadScalar:
    """The real number ``p + q*sqrt(d)`` with ``q != 0``.

    Use :func:`quad` to construct values; it returns a ``Fraction`` when the
    surd part vanishes.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q, d: int):
        if not _squarefree(d):
            raise ValueError(f"discriminant must be square-free and > 1, got {d}")
        self.p = Fraction(p)
        self.q = Fraction(q)
        self.d = int(d)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise DiscriminantError(
                    f"mixed discriminants sqrt({self.d}) and sqrt({other.d})")
            return other.p, other.q
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        if isinstance(other, Rational):
            return Fraction(other.numerator, other.denominator), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.p + c[0], self.q + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(self.p - c[0], self.q - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return quad(c[0] - self.p, c[1] - self.q, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return quad(self.p * a + self.q * b * self.d, self.p * b + self.q * a, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadScalar(-self.p, -self.q, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def norm(self) -> Fraction:
        """Field norm p^2 - d q^2 (never zero for a nonzero element)."""
        return self.p * self.p - self.d * self.q * self.q

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.p, -self.q, self.d)

    def inverse(self):
        n = self.norm()
        return quad(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadScalar):
            self._coerce(other)
            return self * other.inverse()
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if c[0] == 0:
            raise ZeroDivisionError("division by zero")
        return quad(self.p / c[0], self.q / c[0], self.d)

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.inverse() * c[0]

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ordering -------------------------------------------------------------
    def sign(self) -> int:
        return _quad_sign(self.p, self.q, self.d)

    def _cmp(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return _quad_sign(self.p - c[0], self.q - c[1], self.d)

    def __eq__(self, other):
        c = self._coerce(other) if isinstance(other, (QuadScalar, int, Fraction)) else None
        if c is None:
            return NotImplemented
        return self.p == c[0] and self.q == c[1]

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __lt__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s >= 0

    def __bool__(self):
        return True

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def __floor__(self):
        k = math.floor(float(self))
        while _quad_sign(self.p - k, self.q, self.d) < 0:
            k -= 1
        while _quad_sign(self.p - k - 1, self.q, self.d) >= 0:
            k += 1
        return k

    def __repr__(self):
        return f"QuadScalar({self.p!s}, {self.q!s}, {self.d})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadScalar]


def _quad_sign(p: Fraction, q: Fraction, d: int) -> int:
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger square wins; equality is impossible for d square-free
    return sp if p * p > q * q * d else sq


def quad(p, q, d: int | None) -> Scalar:
    """Return ``p + q*sqrt(d)`` as a Fraction when ``q == 0``."""
    q = Fraction(q)
    if q == 0 or d is None:
        if q != 0:
            raise ValueError("surd part given without a discriminant")
        return Fraction(p)
    return QuadScalar(p, q, d)


def sqrt_of(d: int) -> Scalar:
    """sqrt(d) for a square-free d > 1, or the integer root of a perfect square."""
    r = math.isqrt(d)
    if r * r == d:
        return Fraction(r)
    return QuadScalar(0, 1, d)


def to_scalar(x) -> Scalar:
    if isinstance(x, (Fraction, QuadScalar)):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {x!r} to an exact scalar (floats are not accepted)")


def scalar_sign(x) -> int:
    """Exact sign of a scalar: -1, 0 or +1."""
    if isinstance(x, QuadScalar):
        return x.sign()
    return (x > 0) - (x < 0)


def discriminant_of(x) -> int | None:
    return x.d if isinstance(x, QuadScalar) else None


def common_discriminant(values) -> int | None:
    """The single discriminant used by ``values``; raises on a mix."""
    d = None
    for v in values:
        e = discriminant_of(v)
        if e is None:
            continue
        if d is None:
            d = e
        elif d != e:
            raise DiscriminantError(f"mixed discriminants {d} and {e}")
    return d


def is_rational(x) -> bool:
    return not isinstance(x, QuadScalar)


def rational_parts(x) -> tuple[Fraction, Fraction]:
    """(rational part, surd coefficient) of ``x``."""
    if isinstance(x, QuadScalar):
        return x.p, x.q
    return Fraction(x), Fraction(0)


# literal syntax: "p", "p/q", "p/q+r/s*sqrt(d)", also "sqrt(d)", "-r*sqrt(d)"
_RAT = r"[+-]?\d+(?:/\d+)?"
_LITERAL = re.compile(
    rf"^\s*(?:(?P<rat>{_RAT})(?![\d/]|\s*\*)\s*)?"
    rf"(?:(?P<sgn>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse the literal syntax ``p``, ``p/q`` or ``p/q+r/s*sqrt(d)``."""
    m = _LITERAL.match(text)
    if not m or (m.group("rat") is None and m.group("d") is None):
        raise ValueError(f"malformed scalar literal {text!r}")
    rat = Fraction(m.group("rat")) if m.group("rat") else Fraction(0)
    if m.group("d") is None:
        return rat
    if m.group("rat") is not None and m.group("sgn") is None:
        raise ValueError(f"malformed scalar literal {text!r}: missing sign before sqrt")
    coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if m.group("sgn") == "-":
        coef = -coef
    d = int(m.group("d"))
    r = math.isqrt(d)
    if r * r == d:
        return rat + coef * r
    if not _squarefree(d):
        raise ValueError(f"discriminant {d} in {text!r} is not square-free")
    return quad(rat, coef, d)


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar` (canonical form)."""
    if isinstance(x, QuadScalar):
        q = x.q
        sgn = "-" if q < 0 else "+"
        aq = abs(q)
        coef = "" if aq == 1 else f"{aq}*"
        if x.p == 0:
            return f"{'-' if q < 0 else ''}{coef}sqrt({x.d})"
        return f"{x.p}{sgn}{coef}sqrt({x.d})"
    return str(Fraction(x))


def scalar_to_json(x):
    """JSON form of a scalar: an integer when integral, else the literal string."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return format_scalar(x)
