import random
from fractions import Fraction

import pytest
from mpmath import iv

from mvdecide import cf
from mvdecide.cf import (CfNumber, Convergent, StreamExhausted, cf_from_surd,
                         compare_rational, convergent, sign_a_plus_b_theta,
                         sqrt2_minus_1)

iv.dps = 60


def _iv_theta(name):
    if name == "golden":
        return (iv.sqrt(5) - 1) / 2
    if name == "sqrt2":
        return iv.sqrt(2) - 1
    if name == "inv-e":
        return 1 / iv.exp(1)
    raise KeyError(name)


def _iv_cmp(theta_iv, r: Fraction) -> int:
    x = theta_iv - iv.mpf(r.numerator) / iv.mpf(r.denominator)
    if x < 0:
        return -1
    if x > 0:
        return 1
    raise AssertionError("interval oracle could not resolve the comparison")


def _iv_contains(theta_iv, frac: Fraction) -> bool:
    return iv.mpf(frac.numerator) / iv.mpf(frac.denominator) in theta_iv


# ---------------------------------------------------------------------------
# sources

def test_golden_surd_expansion():
    theta = cf_from_surd(-1, 5, 2)
    assert [theta.partial_quotient(k) for k in range(11)] == [0] + [1] * 10
    oracle = _iv_theta("golden")
    for k in range(2, 10):
        assert _iv_contains(oracle, convergent(theta, k).as_fraction()) or \
            _iv_cmp(oracle, convergent(theta, k).as_fraction()) in (-1, 1)
    # convergents alternate around theta
    for k in range(2, 10):
        c = convergent(theta, k).as_fraction()
        assert _iv_cmp(oracle, c) == (-1 if k % 2 else 1)


def test_sqrt2_surd_expansion():
    theta = cf_from_surd(-1, 2, 1)
    assert [theta.partial_quotient(k) for k in range(8)] == [0] + [2] * 7
    oracle = _iv_theta("sqrt2")
    for k in range(2, 8):
        c = convergent(theta, k).as_fraction()
        assert _iv_cmp(oracle, c) == (-1 if k % 2 else 1)


def test_surd_normalizes_divisibility():
    # (1 + sqrt(3)) / 4 needs internal rescaling since 4 does not divide 2
    theta = cf_from_surd(1, 3, 4)
    oracle = (1 + iv.sqrt(3)) / 4
    for k in range(3, 9):
        c = convergent(theta, k).as_fraction()
        assert _iv_cmp(oracle, c) == (-1 if k % 2 else 1)


def test_surd_errors():
    with pytest.raises(cf.DIsPerfectSquare):
        cf_from_surd(0, 4, 2)
    with pytest.raises(cf.ThetaOutOfRange):
        cf_from_surd(1, 5, 2)  # (1+sqrt5)/2 > 1
    with pytest.raises(cf.ThetaOutOfRange):
        cf_from_surd(-5, 2, 1)  # negative
    with pytest.raises(ValueError):
        cf_from_surd(0, 2, 0)


def test_inv_e_pattern_against_oracle():
    theta = CfNumber.inv_e()
    assert theta.partial_quotient(1) == 2
    assert [theta.partial_quotient(k) for k in range(1, 11)] == \
        [2, 1, 2, 1, 1, 4, 1, 1, 6, 1]
    oracle = _iv_theta("inv-e")
    for k in range(2, 20):
        c = convergent(theta, k).as_fraction()
        assert _iv_cmp(oracle, c) == (-1 if k % 2 else 1)


def test_periodic_validation():
    with pytest.raises(ValueError):
        CfNumber.periodic([], [])
    with pytest.raises(ValueError):
        CfNumber.periodic([0], [1])


def test_stream_budget():
    theta = CfNumber.from_stream([1, 2, 3, 4, 5], budget=5)
    assert theta.partial_quotient(5) == 5
    with pytest.raises(StreamExhausted):
        theta.partial_quotient(9)


def test_golden_quotient_example():
    assert CfNumber.golden().partial_quotient(7) == 1


# ---------------------------------------------------------------------------
# convergents

def test_convergent_determinant_invariant():
    for theta in (CfNumber.golden(), sqrt2_minus_1(), CfNumber.inv_e()):
        prev = convergent(theta, 0)
        for k in range(1, 12):
            cur = convergent(theta, k)
            assert abs(cur.p * prev.q - prev.p * cur.q) == 1
            assert cur.q > 0
            prev = cur


def test_convergent_quality():
    theta = CfNumber.golden()
    oracle = _iv_theta("golden")
    for k in range(2, 12):
        c = convergent(theta, k)
        err = oracle - iv.mpf(c.p) / iv.mpf(c.q)
        assert abs(err) < iv.mpf(1) / (c.q * c.q)


# ---------------------------------------------------------------------------
# comparisons

def test_compare_rational_examples():
    assert compare_rational(CfNumber.golden(), Fraction(1, 2)) == 1
    assert compare_rational(CfNumber.golden(), 1) == -1
    assert compare_rational(CfNumber.golden(), 0) == 1
    assert compare_rational(CfNumber.inv_e(), Fraction(3, 8)) == -1


def test_compare_rational_against_interval_oracle():
    rng = random.Random(7)
    cases = [("golden", CfNumber.golden()),
             ("sqrt2", sqrt2_minus_1()),
             ("inv-e", CfNumber.inv_e())]
    for name, theta in cases:
        oracle = _iv_theta(name)
        for _ in range(1000):
            q = rng.randint(1, 10 ** 6)
            r = Fraction(rng.randint(0, q), q)
            assert compare_rational(theta, r) == _iv_cmp(oracle, r)


def test_sign_examples():
    golden = CfNumber.golden()
    assert sign_a_plus_b_theta(0, 0, golden) == 0
    assert sign_a_plus_b_theta(1, -1, golden) == 1
    assert sign_a_plus_b_theta(-1, 2, golden) == 1
    assert sign_a_plus_b_theta(1, -2, golden) == -1
    assert sign_a_plus_b_theta(5, 0, golden) == 1


def test_sign_antisymmetry(rng):
    golden = CfNumber.golden()
    for _ in range(300):
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        assert sign_a_plus_b_theta(a, b, golden) == \
            -sign_a_plus_b_theta(-a, -b, golden)


def test_periodic_decisions_never_exhaust():
    theta = cf_from_surd(-1, 13, 3)  # (sqrt(13)-1)/3
    rng = random.Random(3)
    for _ in range(200):
        a = rng.randint(-10 ** 6, 10 ** 6)
        b = rng.randint(-10 ** 6, 10 ** 6)
        sign_a_plus_b_theta(a, b, theta)  # must not raise
    assert theta.consumed <= 200
