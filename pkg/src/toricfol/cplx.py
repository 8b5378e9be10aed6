"""Exact complex numbers with real and imaginary parts in Q or Q(sqrt(d))."""

from __future__ import annotations

from fractions import Fraction

from .scalar import Scalar, format_scalar, scalar_to_json, to_scalar

ZERO = Fraction(0)


class ExactComplex:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re: Scalar = to_scalar(re)
        self.im: Scalar = to_scalar(im)

    @classmethod
    def coerce(cls, x) -> "ExactComplex":
        """Accept an ExactComplex, a scalar, a ``(re, im)`` pair or a ``{"re", "im"}`` dict."""
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, dict):
            return cls(x.get("re", 0), x.get("im", 0))
        if isinstance(x, (tuple, list)):
            if len(x) != 2:
                raise ValueError(f"complex pair must have two entries, got {x!r}")
            return cls(x[0], x[1])
        return cls(x, 0)

    def __add__(self, other):
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other):
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = ExactComplex(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return ExactComplex(self.re, -self.im)

    def __eq__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ExactComplex({format_scalar(self.re)}, {format_scalar(self.im)})"

    def to_json(self) -> dict:
        return {"re": scalar_to_json(self.re), "im": scalar_to_json(self.im)}
