import json

import mpmath
import pytest

import oracles
from sp4gysin.errors import PrecisionUnreachable, UnsupportedWeight
from sp4gysin.lvalues import (
    completed_l,
    decimal_string,
    euler_product,
    l_value,
    nonvanishing_check,
    period,
    period_polynomial,
)
from sp4gysin.modular_forms import delta, eigenform


@pytest.mark.parametrize("k", [12, 16])
def test_functional_equation(k):
    f = eigenform(k, 60)
    for s in range(1, k):
        lam, e1 = completed_l(f, s, split=1.3)
        dual, e2 = completed_l(f, k - s, split=0.7)
        assert abs(lam - (-1) ** (k // 2) * dual) < 1e-9
        assert e1 < 1e-20 and e2 < 1e-20


def test_value_independent_of_split():
    f = delta(60)
    a, _ = completed_l(f, 6.5, split=1)
    b, _ = completed_l(f, 6.5, split=1.5)
    assert abs(a - b) < 1e-25


def test_known_l_values_of_delta():
    f = delta(60)
    lv = l_value(f, 8)
    assert abs(lv.value) > 10 * lv.error_bound
    assert abs(lv.value - mpmath.mpf("0.930707030298")) < 1e-11
    assert abs(l_value(f, 10).value) > 10 * l_value(f, 10).error_bound


def test_euler_product_cross_check():
    f = delta(120)
    lv = l_value(f, 11)
    prod, log_tail = euler_product(f, 11, prime_bound=100)
    rel = abs(lv.value - prod) / abs(prod)
    assert rel <= mpmath.exp(log_tail) - 1 + lv.error_bound / abs(lv.value)


def test_l_value_range_and_precision():
    f = delta(60)
    with pytest.raises(ValueError):
        l_value(f, 12)
    with pytest.raises(PrecisionUnreachable):
        l_value(delta(2), 6, tolerance=1e-14)


def test_period_identity_and_symmetry():
    f = delta(60)
    r0 = period(f, 0)
    l1 = l_value(f, 1)
    assert abs(r0.value - (-1) / (2j * mpmath.pi) * l1.value) < 1e-12
    poly = period_polynomial(f)
    m = 10
    for n in range(m + 1):
        assert abs(poly.periods[m - n].value - (-1) ** (n + 1) * poly.periods[n].value) < 1e-12
        # even-index periods are imaginary, odd-index ones real
        part = poly.periods[n].value.real if n % 2 == 0 else poly.periods[n].value.imag
        assert abs(part) < 1e-12
    assert poly.modular_symbol(2) == 45 * poly.periods[2].value


@pytest.mark.parametrize("n", [0, 2, 4])
def test_period_matches_quadrature(n):
    f = delta(60)
    coeffs = [int(c) for c in f.coefficients]
    quad = oracles.period_by_quadrature(coeffs, 12, n)
    p = period(f, n).value
    assert abs(complex(p) - quad) / abs(quad) < 1e-8


def test_nonvanishing_certificates():
    for a, b in [(5, 3), (7, 1), (6, 2), (8, 0)]:
        cert = nonvanishing_check(a, b)
        assert cert.certified and cert.convergence_inequality
        assert cert.weight == 12
        json.dumps(cert.to_json())
    with pytest.raises(UnsupportedWeight):
        nonvanishing_check(2, 0)
    with pytest.raises(UnsupportedWeight):
        nonvanishing_check(20, 0)


def test_decimal_string_rounds_to_certified_digits():
    assert decimal_string(mpmath.mpf("0.123456789"), 1e-4) == "0.1235"
    assert decimal_string(mpmath.mpf("-0.00001"), 1e-3) == "0.000"
