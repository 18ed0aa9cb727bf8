"""Exact scalar fields: Gaussian rationals and the real quadratic field Q(sqrt 5).

All spectral bookkeeping in this package is done over one of three fields:
plain `Fraction`, `GaussQ` (a + b*i with rational a, b) for complex weight
bases and Clifford generators, and `QSqrt5` (a + b*sqrt(5)) for the
octonion-based homogeneous-space computations, which stay real.

Elements are immutable and hashable; arithmetic never leaves the field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussQ:
    """Gaussian rational a + b*i."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rat = 0, im: Rat = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussQ is immutable")

    # -- ring structure -------------------------------------------------
    def __add__(self, other):
        other = as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in GaussQ")
        return GaussQ(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return as_gauss(other) / self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __pos__(self):
        return self

    # -- structure ------------------------------------------------------
    def conjugate(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        other = as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussQ({self.re})"
        return f"GaussQ({self.re}, {self.im})"


I = GaussQ(0, 1)


def as_gauss(x) -> GaussQ:
    if isinstance(x, GaussQ):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussQ(x, 0)
    return NotImplemented


class QSqrt5:
    """Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5)."""

    __slots__ = ("a", "b")

    def __init__(self, a: Rat = 0, b: Rat = 0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, *a):
        raise AttributeError("QSqrt5 is immutable")

    def __add__(self, other):
        other = as_sqrt5(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_sqrt5(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = as_sqrt5(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_sqrt5(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.a * other.a - 5 * other.b * other.b
        if n == 0:
            raise ZeroDivisionError("division by zero in QSqrt5")
        # multiply by the conjugate a - b*sqrt(5)
        return QSqrt5(
            (self.a * other.a - 5 * self.b * other.b) / n,
            (self.b * other.a - self.a * other.b) / n,
        )

    def __rtruediv__(self, other):
        return as_sqrt5(other) / self

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __pos__(self):
        return self

    def conjugate(self) -> "QSqrt5":
        """Complex conjugation (identity: the field is real)."""
        return self

    def galois_conjugate(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def __eq__(self, other):
        other = as_sqrt5(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, "s5"))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(5)."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        big_a = a * a > 5 * b * b
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def __lt__(self, other):
        other = as_sqrt5(other)
        return (self - other).sign() < 0

    def __le__(self, other):
        other = as_sqrt5(other)
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = as_sqrt5(other)
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = as_sqrt5(other)
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        if not self.b:
            return f"QSqrt5({self.a})"
        return f"QSqrt5({self.a}, {self.b})"


SQRT5 = QSqrt5(0, 1)


def as_sqrt5(x) -> QSqrt5:
    if isinstance(x, QSqrt5):
        return x
    if isinstance(x, (int, Fraction)):
        return QSqrt5(x, 0)
    return NotImplemented


# -- generic helpers used by linear algebra ------------------------------

def conj(x):
    """Complex conjugate across the supported scalar types."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.conjugate()


def to_float(x) -> complex:
    if isinstance(x, (int, Fraction)):
        return complex(x)
    if isinstance(x, GaussQ):
        return complex(x)
    if isinstance(x, QSqrt5):
        return complex(float(x))
    raise TypeError(type(x))
