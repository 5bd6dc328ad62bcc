"""Exact complex-rational scalars and tagged moment values.

All closed-form moment computations in this package run over Gaussian
rationals (pairs of :class:`fractions.Fraction` for the real and imaginary
parts).  Mixing a :class:`ComplexRational` with a float or complex operand
degrades to ``complex``, mirroring how ``Fraction`` interacts with ``float``;
:class:`MomentValue` records which backend actually produced a number so that
exactness is never silently claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ComplexRational:
    """A Gaussian rational re + im*i with exact Fraction components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return ComplexRational(Fraction(other))
        return None  # float/complex handled by the caller

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_complex() + other
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other if isinstance(other, ComplexRational) else -1 * other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_complex() * other
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_complex() / other
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero ComplexRational")
        return ComplexRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / self.to_complex()
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are exact")
        out = ComplexRational(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return self.to_complex() == other
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- views --------------------------------------------------------------

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


CQ_ZERO = ComplexRational()
CQ_ONE = ComplexRational(Fraction(1))


def rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or a float fallback.

    Returns a Fraction when q is a perfect rational square, else float(sqrt).
    """
    if q < 0:
        raise ValueError("negative operand")
    import math

    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return math.sqrt(q)


EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class MomentValue:
    """A computed moment, tagged with the backend that produced it."""

    value: ComplexRational | complex
    backend: str = EXACT

    def __post_init__(self):
        if self.backend not in (EXACT, FLOAT):
            raise ValueError(f"unknown backend tag {self.backend!r}")
        if self.backend == EXACT and not isinstance(self.value, ComplexRational):
            raise ValueError("exact backend requires a ComplexRational value")

    @classmethod
    def wrap(cls, v) -> "MomentValue":
        """Tag a raw scalar: ComplexRational stays exact, numbers go float."""
        if isinstance(v, ComplexRational):
            return cls(v, EXACT)
        if isinstance(v, (int, Fraction)):
            return cls(ComplexRational(Fraction(v)), EXACT)
        return cls(complex(v), FLOAT)

    @property
    def exact(self) -> bool:
        return self.backend == EXACT

    def as_complex(self) -> complex:
        if isinstance(self.value, ComplexRational):
            return self.value.to_complex()
        return complex(self.value)

    def as_fraction(self) -> Fraction:
        """The value as an exact real rational; raises if float or non-real."""
        if not isinstance(self.value, ComplexRational):
            raise ValueError("not an exact value")
        if not self.value.is_real():
            raise ValueError("value has a nonzero imaginary part")
        return self.value.re


def parse_rational(s) -> Fraction:
    """Parse "p/q" strings, ints and integer-valued floats into Fractions."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, float):
        if s.is_integer():
            return Fraction(int(s))
        raise TypeError(f"non-integer float {s!r} is not exact; pass a 'p/q' string")
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot parse rational from {s!r}")


def exact_or_float(x) -> Fraction | float:
    """Coerce a model parameter: exact types stay exact, floats stay floats."""
    if isinstance(x, float):
        return x
    return parse_rational(x)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)
