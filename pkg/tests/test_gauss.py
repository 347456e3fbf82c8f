import cmath

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twoadic.gauss import (
    canonical_primitive_root,
    cyclotomic_table,
    gauss_periods,
    legendre_symbol,
    quadratic_period_values,
    quartic_gauss_sum,
    quartic_period_product,
    quartic_product_closed_form,
    two_squares,
)
from twoadic.numtheory import primes_upto

P1MOD4 = [p for p in primes_upto(200) if p % 4 == 1]


@pytest.mark.parametrize("p,g", [(5, 2), (7, 3), (13, 2), (23, 5), (41, 6)])
def test_primitive_root(p, g):
    assert canonical_primitive_root(p) == g


def test_cyclotomic_table_13():
    t = cyclotomic_table(13, 4)
    assert t.generator == 2
    assert t.cls(0) == frozenset({1, 3, 9})
    assert t.cls(1) == frozenset({2, 6, 5})
    assert t.cls(5) == t.cls(1)
    assert len(t.classes) == 4
    assert frozenset().union(*t.classes) == frozenset(range(1, 13))


def test_cyclotomic_table_rejects():
    with pytest.raises(ValueError):
        cyclotomic_table(13, 5)
    with pytest.raises(ValueError):
        cyclotomic_table(13, 2, generator=3)  # 3 has order 3


@given(st.sampled_from(primes_upto(300)[1:]), st.integers(-1000, 1000))
def test_legendre_symbol_euler(p, x):
    e = pow(x, (p - 1) // 2, p)
    want = 0 if x % p == 0 else (1 if e == 1 else -1)
    assert legendre_symbol(x, p) == want


@pytest.mark.parametrize("p,a,b", [(5, 1, 2), (13, -3, 2), (17, -1, 4), (29, 5, 2), (37, 1, 6)])
def test_two_squares(p, a, b):
    ts = two_squares(p)
    assert (ts.a, ts.b) == (a, b)


@pytest.mark.parametrize("p", P1MOD4)
def test_two_squares_normalization(p):
    ts = two_squares(p)
    assert ts.a ** 2 + ts.b ** 2 == p
    assert ts.a % 4 == (-legendre_symbol(2, p)) % 4


def test_two_squares_rejects():
    for bad in (7, 9, 2):
        with pytest.raises(ValueError):
            two_squares(bad)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 101])
def test_quadratic_periods(p):
    b0, b1 = quadratic_period_values(p)
    assert b0 == pytest.approx((p ** 0.5 - 1) / 2, abs=1e-12)
    assert b1 == pytest.approx(-(p ** 0.5 + 1) / 2, abs=1e-12)
    # independent float evaluation
    direct = sum(cmath.exp(2j * cmath.pi * x * x / p) for x in range(1, (p + 1) // 2))
    assert direct.real == pytest.approx(b0, abs=1e-9)


@pytest.mark.parametrize("p,want", [(5, 16), (13, 144), (17, -16), (29, 1 + 58 + 25 * 29)])
def test_quartic_product(p, want):
    assert quartic_period_product(p) == want == quartic_product_closed_form(p)


@pytest.mark.parametrize("p", P1MOD4)
def test_period_identities(p):
    b = gauss_periods(p, 4)
    assert abs(1 + sum(b)) < 1e-12
    g = quartic_gauss_sum(p)
    assert abs(abs(g) - mpmath.sqrt(p)) < 1e-12
    assert quartic_period_product(p) % p == 1


def test_gauss_periods_match_float():
    p = 13
    t = cyclotomic_table(p, 4)
    for i, val in enumerate(gauss_periods(p, 4)):
        direct = sum(cmath.exp(2j * cmath.pi * x / p) for x in t.cls(i))
        assert abs(complex(val) - direct) < 1e-12
