"""Exact rational-complex arithmetic for oracle computations in tests.

Floating-point inputs are exact rationals, so sequences like k^-n can be
computed without any rounding and compared against the double-precision
implementation at machine-level tolerances.
"""

from __future__ import annotations

from fractions import Fraction


class RationalComplex:
    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def from_complex(cls, z: complex) -> "RationalComplex":
        return cls(Fraction(z.real), Fraction(z.imag))

    @classmethod
    def one(cls) -> "RationalComplex":
        return cls(1)

    def __add__(self, other):
        return RationalComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return RationalComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return RationalComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def reciprocal(self) -> "RationalComplex":
        denom = self.re * self.re + self.im * self.im
        if denom == 0:
            raise ZeroDivisionError("rational complex division by zero")
        return RationalComplex(self.re / denom, -self.im / denom)

    def __truediv__(self, other):
        return self * other.reciprocal()

    def __eq__(self, other):
        return self.re == other.re and self.im == other.im

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"RationalComplex({self.re!r}, {self.im!r})"


def rel_error(value: complex, exact: RationalComplex) -> float:
    """|value - exact| / |exact| with the difference taken in exact arithmetic
    up to the final float conversion."""
    diff = RationalComplex.from_complex(complex(value)) - exact
    num = (diff.re * diff.re + diff.im * diff.im) ** 0.5
    den = (exact.re * exact.re + exact.im * exact.im) ** 0.5
    if den == 0:
        return float(num)
    return float(num / den)
