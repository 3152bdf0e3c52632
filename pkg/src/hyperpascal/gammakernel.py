"""Overflow-safe real Gamma evaluation and the pole-order algebra behind
regularized h -> 0+ limits of Gamma ratios.

Every quantity computed by this package is a product or quotient of Gamma
factors evaluated at h-shifted arguments.  Away from poles a factor
Gamma(x + h) tends to Gamma(x); at a non-positive integer -m it behaves
like (-1)**m / (m! * h).  A quotient of such factors therefore reduces to

    (leading coefficient) * h**(-order)

where the order is an exact integer obtained by counting poles.  The
leading coefficient is carried as sign * exp(log_magnitude) so that
ratios of astronomically large Gamma values never overflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

INTEGER_SNAP = 1e-9  # floats closer than this to an integer are treated as exact


class PoleError(ValueError):
    """Gamma requested exactly at a non-positive integer."""


class DivergentTermError(ArithmeticError):
    """A regularized coefficient retains a positive power of 1/h."""


def nearest_integer(x: float):
    """Round(x) as an int when x sits within the snap tolerance, else None.

    Lattice coordinates arrive as floating point; pole classification must
    not flip on representation noise, hence the fixed snap width.
    """
    r = round(x)
    if abs(x - r) < INTEGER_SNAP:
        return int(r)
    return None


def is_nonpositive_integer(x: float) -> bool:
    m = nearest_integer(x)
    return m is not None and m <= 0


def is_positive_integer(x: float) -> bool:
    m = nearest_integer(x)
    return m is not None and m >= 1


def _gamma_sign(x: float) -> int:
    """Sign of Gamma(x) for non-pole real x (alternates between poles)."""
    if x > 0:
        return 1
    m = math.floor(-x)  # x lies in (-m-1, -m)
    return -1 if m % 2 == 0 else 1


@dataclass(frozen=True)
class SignedLogValue:
    """A nonzero real held as log|value| plus a sign; sign 0 encodes 0."""

    log_magnitude: float
    sign: int

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.log_magnitude)
        except OverflowError:
            mag = math.inf
        return self.sign * mag


def log_gamma_signed(x: float) -> SignedLogValue:
    """log|Gamma(x)| and the sign of Gamma(x) for real non-pole x.

    Raises PoleError at non-positive integers; use gamma_leading there.
    """
    if not math.isfinite(x):
        raise ValueError(f"gamma argument must be finite, got {x!r}")
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    return SignedLogValue(math.lgamma(x), _gamma_sign(x))


class HLimitValue:
    """Leading term c * h**(-order) of a Gamma expression as h -> 0+.

    order > 0 means the h -> 0 limit diverges, order == 0 a finite limit
    equal to the mantissa, order < 0 a limit of exactly zero.  Products
    multiply mantissas and add orders; quotients divide and subtract.
    Only the leading Laurent term is kept: no downstream quantity depends
    on subleading corrections.
    """

    __slots__ = ("sign", "log_magnitude", "order")

    def __init__(self, sign: int, log_magnitude: float, order: int):
        self.sign = sign
        self.log_magnitude = log_magnitude if sign != 0 else -math.inf
        self.order = order if sign != 0 else 0

    @classmethod
    def from_mantissa(cls, mantissa: float, order: int = 0) -> "HLimitValue":
        if mantissa == 0.0:
            return cls(0, -math.inf, 0)  # canonical exact zero
        sign = 1 if mantissa > 0 else -1
        return cls(sign, math.log(abs(mantissa)), order)

    @classmethod
    def zero(cls) -> "HLimitValue":
        return cls(0, -math.inf, 0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def mantissa(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            mag = math.exp(self.log_magnitude)
        except OverflowError:
            mag = math.inf
        return self.sign * mag

    def __mul__(self, other: "HLimitValue") -> "HLimitValue":
        if self.sign == 0 or other.sign == 0:
            return HLimitValue.zero()
        return HLimitValue(
            self.sign * other.sign,
            self.log_magnitude + other.log_magnitude,
            self.order + other.order,
        )

    def __truediv__(self, other: "HLimitValue") -> "HLimitValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a canonical-zero HLimitValue")
        if self.sign == 0:
            return HLimitValue.zero()
        return HLimitValue(
            self.sign * other.sign,
            self.log_magnitude - other.log_magnitude,
            self.order - other.order,
        )

    def reciprocal(self) -> "HLimitValue":
        if self.sign == 0:
            raise ZeroDivisionError("reciprocal of a canonical-zero HLimitValue")
        return HLimitValue(self.sign, -self.log_magnitude, -self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HLimitValue):
            return NotImplemented
        return (
            self.sign == other.sign
            and self.order == other.order
            and (self.sign == 0 or self.log_magnitude == other.log_magnitude)
        )

    def __repr__(self) -> str:
        return f"HLimitValue(mantissa={self.mantissa!r}, order={self.order})"


def gamma_leading(x: float) -> HLimitValue:
    """Leading behavior of Gamma(x + h) as h -> 0+.

    Away from poles this is (Gamma(x), order 0).  At x = -m for integer
    m >= 0 the residue is hard-coded: ((-1)**m / m!, order 1).
    """
    if not math.isfinite(x):
        raise ValueError(f"gamma argument must be finite, got {x!r}")
    m = nearest_integer(x)
    if m is not None and m <= 0:
        m = -m
        sign = 1 if m % 2 == 0 else -1
        return HLimitValue(sign, -math.lgamma(m + 1), 1)
    return HLimitValue(_gamma_sign(x), math.lgamma(x), 0)


def pochhammer(a: float, k: float) -> HLimitValue:
    """Regularized Pochhammer symbol (a)_k = lim Gamma(a+k+h)/Gamma(a+h).

    Valid for arbitrary real a and k; pole collisions in either Gamma are
    absorbed into the order bookkeeping, so the result is total.  When
    both (a)_k and (a+k)_{-k} are finite nonzero they are reciprocals.
    """
    return gamma_leading(a + k) / gamma_leading(a)


def _int_power(base: complex, n: int) -> complex:
    if n < 0:
        return 1.0 / _int_power(base, -n)
    result = complex(1.0)
    square = base
    while n:
        if n & 1:
            result *= square
        square *= square
        n >>= 1
    return result


def principal_power(base: complex, exponent: float) -> complex:
    """base**exponent on the principal branch, argument in (-pi, pi].

    Integer exponents (after snapping) are evaluated by exact binary
    powering, which agrees with the principal branch and keeps values
    like i**2 == -1 free of rounding dust.
    """
    base = complex(base)
    if base == 0:
        if exponent > 0:
            return complex(0.0)
        raise ValueError("0 cannot be raised to a non-positive power")
    n = nearest_integer(exponent)
    if n is not None:
        return _int_power(base, n)
    if base.imag == 0.0:
        # force arg = +pi on the negative real axis (rules out -0.0 imag)
        base = complex(base.real, 0.0)
    return cmath.exp(exponent * cmath.log(base))
