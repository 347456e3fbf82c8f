from collections import Counter
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twoadic.numtheory import (
    FactorizationIncomplete,
    factorize,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    primes_upto,
)


def test_primes_upto():
    assert primes_upto(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert primes_upto(1) == ()


@given(st.integers(-5, 10**7))
def test_is_prime_against_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


@pytest.mark.parametrize("n", [2**61 - 1, 2**89 - 1, 2**127 - 1])
def test_mersenne_primes(n):
    assert is_prime(n)


@settings(max_examples=50)
@given(st.integers(1, 10**15))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert prod(p**e for p, e in f.items()) == n
    assert all(sympy.isprime(p) for p in f)


def test_factorize_mersenne_64():
    f = factorize(2**64 - 1)
    assert f == Counter({3: 1, 5: 1, 17: 1, 257: 1, 641: 1, 65537: 1, 6700417: 1})


def test_factorize_budget_exhausted():
    # product of two ~40-bit primes with almost no rho budget and no trial help
    a = sympy.nextprime(2**40)
    b = sympy.nextprime(a)
    n = 4 * a * b
    with pytest.raises(FactorizationIncomplete) as exc:
        factorize(n, trial_limit=10, rho_iterations=4)
    assert exc.value.cofactor == a * b
    assert exc.value.partial == Counter({2: 2})


def test_orders():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6
    assert is_primitive_root(2, 13) and not is_primitive_root(3, 13)
