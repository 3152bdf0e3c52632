"""Independent oracles used across the test suite.

Everything here is deliberately built from the standard library alone
(math.lgamma / math.gamma plus exact integer arithmetic), not from the
package under test, so these functions stay valid reference points even
if the package's own Gamma plumbing is broken.
"""

import math


def gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    m = math.floor(-x)
    return -1 if m % 2 == 0 else 1


def gamma_value(x: float) -> float:
    """Gamma at a non-pole real point via lgamma plus a sign."""
    return gamma_sign(x) * math.exp(math.lgamma(x))


def small_h_point_value(coords, h=1e-6) -> float:
    """Direct finite-h quotient Gamma(sum+1+h) / prod Gamma(xi+1+h)."""
    total = math.fsum(coords) + 1.0 + h
    log_num = math.lgamma(total)
    sign = gamma_sign(total)
    log_den = 0.0
    for c in coords:
        arg = c + 1.0 + h
        log_den += math.lgamma(arg)
        sign *= gamma_sign(arg)
    return sign * math.exp(log_num - log_den)


def gamma_via_recurrence(x: float) -> float:
    """Gamma(x) by shifting into [1.5, 2.5] with Gamma(x+1) = x Gamma(x).

    Uses math.gamma only on the positive shifted argument, so it checks
    negative-axis values through a route independent of reflection.
    """
    shift = 0
    while x + shift < 1.5:
        shift += 1
    top = math.gamma(x + shift)
    denom = 1.0
    for j in range(shift):
        denom *= x + j
    return top / denom


def expand_power_sum(dim: int, n: int):
    """Exact integer coefficients of (x1 + ... + x_dim)**n by convolution."""
    coeffs = {(0,) * dim: 1}
    for _ in range(n):
        grown = {}
        for mono, c in coeffs.items():
            for i in range(dim):
                key = mono[:i] + (mono[i] + 1,) + mono[i + 1 :]
                grown[key] = grown.get(key, 0) + c
        coeffs = grown
    return coeffs


def expand_one_plus_sum(variables, n: int) -> complex:
    """(1 + sum variables)**n via the exact expansion oracle."""
    dim = len(variables) + 1
    coeffs = expand_power_sum(dim, n)
    total = 0j
    for mono, c in coeffs.items():
        term = complex(c)
        for x, e in zip(variables, mono[1:]):
            term *= complex(x) ** e
        total += term
    return total
