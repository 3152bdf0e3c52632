"""Compensated (Neumaier) accumulation for long, slowly decaying sums."""

from __future__ import annotations


class CompensatedSum:
    """Error-carrying accumulator for complex terms.

    Real and imaginary parts are tracked with independent Neumaier
    compensation, so adding 1e6 terms of comparable magnitude keeps the
    rounding error near one ulp of the result instead of sqrt(N) ulps.
    """

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self) -> None:
        self._re = 0.0
        self._im = 0.0
        self._cre = 0.0
        self._cim = 0.0

    def add(self, z: complex) -> None:
        x = z.real
        s = self._re
        t = s + x
        if abs(s) >= abs(x):
            self._cre += (s - t) + x
        else:
            self._cre += (x - t) + s
        self._re = t

        y = z.imag
        s = self._im
        t = s + y
        if abs(s) >= abs(y):
            self._cim += (s - t) + y
        else:
            self._cim += (y - t) + s
        self._im = t

    @property
    def value(self) -> complex:
        return complex(self._re + self._cre, self._im + self._cim)


def fit_loglog_slope(xs, ys):
    """Least-squares slope of ys against xs (both already log-scaled).

    Returns None when fewer than two distinct abscissae are available.
    """
    n = len(xs)
    if n < 2:
        return None
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0.0:
        return None
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx
