import math

import pytest
from hypothesis import given, strategies as st

from ecplanes.logreal import ONE, ZERO, LogReal, logaddexp

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda x: abs(x) > 1e-200 or x == 0)
lnmags = st.floats(min_value=-5000, max_value=5000, allow_nan=False)
signs = st.sampled_from([-1, 1])


def lr(s, l):
    return LogReal(s, l)


@given(signs, lnmags, signs, lnmags, signs, lnmags)
def test_mul_associative(s1, l1, s2, l2, s3, l3):
    x, y, z = lr(s1, l1), lr(s2, l2), lr(s3, l3)
    a, b = (x * y) * z, x * (y * z)
    assert a.sign == b.sign
    assert abs(a.lnmag - b.lnmag) <= 1e-12 * max(1.0, abs(a.lnmag))


@given(signs, lnmags, signs, lnmags)
def test_add_commutative(s1, l1, s2, l2):
    x, y = lr(s1, l1), lr(s2, l2)
    a, b = x + y, y + x
    assert a.sign == b.sign
    if a.sign:
        assert abs(a.lnmag - b.lnmag) <= 1e-12 * max(1.0, abs(a.lnmag))


@given(finite, finite)
def test_matches_float_arithmetic(x, y):
    X, Y = LogReal.from_float(x), LogReal.from_float(y)
    assert math.isclose(float(X * Y), x * y, rel_tol=1e-12, abs_tol=1e-300)
    assert math.isclose(float(X + Y), x + y, rel_tol=1e-9, abs_tol=1e-9 * (abs(x) + abs(y)))
    assert (X < Y) == (x < y)


def test_wide_spread_addition():
    big = LogReal.from_log(700.0)
    tiny = LogReal.from_log(-700.0)
    s = big + tiny
    assert s.lnmag == pytest.approx(700.0, abs=1e-12)
    assert (tiny + tiny).lnmag == pytest.approx(-700 + math.log(2), abs=1e-12)
    assert (big - big) == ZERO


def test_basics():
    assert float(LogReal.from_float(-3.5)) == pytest.approx(-3.5)
    assert LogReal.from_float(0) == ZERO
    assert ONE * 7 == 7
    assert float(LogReal.from_float(16).sqrt()) == pytest.approx(4)
    assert float(LogReal.from_float(-2) ** 3) == pytest.approx(-8)
    assert LogReal.from_float(1000).log10() == pytest.approx(3)
    assert logaddexp(-math.inf, 1.0) == 1.0
    with pytest.raises(ZeroDivisionError):
        ONE / 0
    with pytest.raises(ValueError):
        LogReal.from_float(-1).sqrt()


def test_compare_beyond_float_range():
    a = LogReal.from_log(2000.0)
    b = LogReal.from_log(2001.0)
    assert a < b and -b < -a and ZERO < a and -a < ZERO
