import cmath
import math
import random

import pytest

from hyperpascal import (
    CONVERGED,
    FINITE,
    INCONCLUSIVE,
    PASS,
    ZERO_BY_POLES,
    DivergentTermError,
    H1Params,
    bilateral_binomial_rhs,
    convergence_exponent,
    evaluate_h1,
    generalized_binomial,
    h1_term,
    point_value,
    principal_power,
    verify_bilateral_binomial,
)


def test_h1_term_center_is_one():
    for params in (H1Params(0.3, 2.7, 1j), H1Params(-4, 9, -1), H1Params(2.5, 0.5, 1)):
        assert h1_term(params, 0) == 1.0


def test_h1_term_vanishing_coefficient():
    assert h1_term(H1Params(-1, 1, 0.5j), 2) == 0.0


def test_h1_term_first_ratio():
    term = h1_term(H1Params(0.5, 3.0, 1.0), 1)
    assert term == pytest.approx(1.0 / 6.0, rel=1e-12)


def test_h1_term_divergent_coefficient():
    # b at a non-positive integer with nothing cancelling
    with pytest.raises(DivergentTermError):
        h1_term(H1Params(0.5, -1.0, 1.0), 2)


def test_h1_term_negative_side_matches_printed_products():
    rng = random.Random(11)
    for _ in range(100):
        a = rng.uniform(-5, 5)
        b = rng.uniform(-5, 5)
        if abs(a - round(a)) < 1e-3 or abs(b - round(b)) < 1e-3:
            continue
        z = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        for k in range(-6, 0):
            product = 1.0
            for j in range(1, -k + 1):
                product *= (b - j) / (a - j)
            expected = product * z**k
            assert h1_term(H1Params(a, b, z), k) == pytest.approx(expected, rel=1e-12)


def test_evaluate_h1_terminating_cases():
    report = evaluate_h1(H1Params(-1, 1, -1), 8)
    assert report.verdict == CONVERGED
    assert report.value == pytest.approx(2.0, rel=1e-12)
    assert report.last_term_magnitude == 0.0

    report = evaluate_h1(H1Params(-2, 1, -1), 8)
    assert report.verdict == CONVERGED
    assert report.value == pytest.approx(4.0, rel=1e-12)


def test_evaluate_h1_against_high_truncation_oracle():
    params = H1Params(0.5, 4.0, cmath.exp(0.7j))
    report = evaluate_h1(params, 2000)
    oracle = evaluate_h1(params, 50_000)
    assert report.verdict == CONVERGED
    assert abs(report.value - oracle.value) <= 1e-6 * abs(oracle.value)


def test_evaluate_h1_window_growth_stability():
    # decay exponent 4: enlarging the window must not move the value
    params = H1Params(0.5, 4.5, cmath.exp(1j))
    small = evaluate_h1(params, 4000)
    large = evaluate_h1(params, 8000)
    assert small.verdict == CONVERGED
    assert abs(large.value - small.value) < 1e-10 * abs(small.value)


def test_evaluate_h1_off_circle_flagged():
    report = evaluate_h1(H1Params(0.5, 4.0, 0.8), 64)
    assert report.verdict == "NotConverging"


def test_evaluate_h1_window_validation():
    with pytest.raises(ValueError):
        evaluate_h1(H1Params(0.5, 4.0, 1.0), 4)


def test_convergence_exponent_values():
    assert convergence_exponent(-1.5, 2.0) == 3.5
    # the binomial parameterization gives x + 1
    x, y = 2.5, 0.7
    assert convergence_exponent(y - x, y + 1.0) == pytest.approx(x + 1.0)


def test_convergence_exponent_matches_measured_decay():
    report = evaluate_h1(H1Params(0.5, 4.0, 1j), 4000)
    assert report.decay_exponent_estimate == pytest.approx(3.5, abs=0.3)


def test_bilateral_binomial_rhs_terminating():
    report = bilateral_binomial_rhs(2.0, 0.0, 1.0, window=16)
    assert report.value == pytest.approx(4.0, rel=1e-12)
    report = bilateral_binomial_rhs(1.0, 0.0, 1.0, window=16)
    assert report.value == pytest.approx(2.0, rel=1e-12)


def test_bilateral_binomial_rhs_fractional():
    z = cmath.exp(1j * math.pi / 3)
    report = bilateral_binomial_rhs(2.5, 0.7, z)
    assert report.verdict == CONVERGED
    expected = principal_power(1 + z, 2.5)
    assert abs(report.value - expected) <= 1e-6 * abs(expected)


def test_verify_terminating_exact():
    report = verify_bilateral_binomial(3.0, 1.0, 1.0, tolerance=1e-12)
    assert report.verdict == PASS
    assert report.lhs == pytest.approx(8.0)
    assert report.rhs == pytest.approx(8.0, rel=1e-12)


def test_verify_terminating_on_circle_points():
    for x in range(0, 6):
        for y in range(0, x + 1):
            for z in (1.0, 1j, cmath.exp(1j * math.pi / 3)):
                report = verify_bilateral_binomial(float(x), float(y), z, tolerance=1e-10)
                assert report.verdict == PASS, (x, y, z, report.rel_error)


def test_verify_fractional_passes():
    z = cmath.exp(1j * math.pi / 3)
    report = verify_bilateral_binomial(2.5, 0.7, z, tolerance=1e-5)
    assert report.verdict == PASS
    # the adaptive window stays well inside the 2e4 budget
    series = bilateral_binomial_rhs(2.5, 0.7, z, tolerance=1e-5)
    assert series.window <= 20_000


def test_verify_subunit_exponent_inconclusive():
    report = verify_bilateral_binomial(-0.5, 0.25, 1j, tolerance=1e-5)
    assert report.verdict == INCONCLUSIVE


def test_verify_lhs_pole_rejected():
    with pytest.raises(ValueError):
        verify_bilateral_binomial(-1.0, 0.5, -1.0, tolerance=1e-6)


def test_generalized_binomial_values():
    v = generalized_binomial(5, 2)
    assert v.kind == FINITE and v.value == pytest.approx(10.0, rel=1e-12)
    v = generalized_binomial(-2, 1)
    assert v.kind == FINITE and v.value == pytest.approx(-2.0, rel=1e-12)
    assert generalized_binomial(3, -1).kind == ZERO_BY_POLES


def test_generalized_binomial_matches_lattice_point():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(-8, 8) / 2.0
        l = rng.randint(-8, 8) / 2.0
        binom = generalized_binomial(n, l)
        lattice = point_value((l, n - l))
        assert binom.kind == lattice.kind, (n, l)
        if binom.kind == FINITE:
            assert binom.value == pytest.approx(lattice.value, rel=1e-12)
