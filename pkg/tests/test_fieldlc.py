import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lc_by_rank
from twoadic.circulant import poly_mul
from twoadic.fieldlc import (
    berlekamp_massey,
    corollary_prediction,
    ideal_lc_corollary_check,
    integer_gcd_witness,
    lc_prime_field,
    poly_gcd_mod_p,
    theorem5_check,
)
from twoadic.sequences import BinarySequence, complement, gen_legendre, gen_m_sequence

B = BinarySequence.from_string
bit_lists = st.lists(st.integers(0, 1), min_size=1, max_size=60)
small_primes = st.sampled_from([2, 3, 5, 7, 11, 13, 1048583])


@pytest.mark.parametrize("text,p,lc", [
    ("11000", 2, 4),
    ("11000", 3, 5),
    ("11010", 3, 4),
    ("01001", 2, 4),
    ("00000", 5, 0),
    ("11111", 2, 1),
    ("10000", 7, 5),
])
def test_worked_examples(text, p, lc):
    rep = lc_prime_field(B(text), p)
    assert rep.lc == lc == rep.bm_lc
    assert rep.gcd_degree == 5 - lc
    assert lc_by_rank([int(c) for c in text], p) == lc


def test_poly_gcd_mod_p():
    # (1+x)(1+x+x^2) and (1+x)^2 over GF(2)
    assert poly_gcd_mod_p([1, 0, 0, 1], [1, 0, 1], 2) == [1, 1]
    assert poly_gcd_mod_p([0], [0], 3) == []
    assert poly_gcd_mod_p([2], [0, 1], 5) == [1]


@settings(max_examples=200)
@given(bit_lists, small_primes)
def test_lc_matches_rank_oracle(bits, p):
    s = BinarySequence(tuple(bits))
    rep = lc_prime_field(s, p)
    assert rep.lc == berlekamp_massey(s, p) == lc_by_rank(bits, p)


@settings(max_examples=50)
@given(bit_lists, small_primes, st.integers(0, 100))
def test_lc_shift_invariant(bits, p, k):
    s = BinarySequence(tuple(bits))
    assert lc_prime_field(s.shifted(k), p).lc == lc_prime_field(s, p).lc


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        lc_prime_field(B("101"), 4)
    with pytest.raises(ValueError):
        berlekamp_massey(B("101"), 1)


def test_witness_a_even_obstruction():
    # P_s = 1 + x: both polynomials are even at every odd integer, so a must be even
    w = integer_gcd_witness(B("11000"))
    assert w.g_coeffs == (1,)
    assert w.a % 2 == 0 and w.a_factors[2] >= 1
    assert lc_prime_field(B("11000"), 2).lc == 4  # gcd grows mod 2


def _check_witness(s, w):
    n = s.period
    lhs = poly_mul(w.u_coeffs, s.bits)
    rhs = poly_mul(w.v_coeffs, [1] + [0] * (n - 1) + [-1]) if w.v_coeffs else []
    size = max(len(lhs), len(rhs), len(w.g_coeffs))
    total = [0] * size
    for i, c in enumerate(lhs):
        total[i] += c
    for i, c in enumerate(rhs):
        total[i] += c
    want = [w.a * c for c in w.g_coeffs] + [0] * (size - len(w.g_coeffs))
    return total == want


@settings(max_examples=100)
@given(bit_lists.filter(lambda b: any(b)))
def test_witness_identity_and_gcd(bits):
    s = BinarySequence(tuple(bits))
    w = integer_gcd_witness(s)
    assert _check_witness(s, w)
    x = sympy.Symbol("x")
    g = sympy.Poly(sympy.gcd(sympy.Poly(list(reversed(bits)), x), sympy.Poly(1 - x ** len(bits), x)), x)
    assert g.degree() == w.g_degree
    for p in (2, 3, 5, 7):
        # reduction can only enlarge the gcd, and only at primes dividing a
        deg_p = len(bits) - lc_prime_field(s, p).lc
        assert deg_p >= w.g_degree
        if w.a % p:
            assert deg_p == w.g_degree
        assert theorem5_check(s, p, w)


def test_reduction_bound_examples():
    assert theorem5_check(B("11010"), 3)
    assert theorem5_check(B("11000"), 2)


def test_corollary_examples():
    m7 = gen_m_sequence(3)
    assert m7.weight == 4
    assert corollary_prediction(m7, 3) == 7 == lc_prime_field(m7, 3).lc
    c7 = complement(m7)
    assert corollary_prediction(c7, 3) == 6 == lc_prime_field(c7, 3).lc
    leg7 = gen_legendre(7)
    assert corollary_prediction(leg7, 5) == 7 == lc_prime_field(leg7, 5).lc
    assert ideal_lc_corollary_check(m7, 3) is True
    with pytest.raises(ValueError):
        corollary_prediction(m7, 2)
    with pytest.raises(ValueError):
        corollary_prediction(B("11000"), 3)


def test_corollary_no_case():
    leg11 = gen_legendre(11)  # weight 5 = (N-1)/2; 3 | N + 1
    assert corollary_prediction(leg11, 3) is None
    assert ideal_lc_corollary_check(leg11, 3) is None
    leg7 = complement(gen_legendre(7))  # weight 4; 2 is excluded, 8 has no odd prime
    assert all(corollary_prediction(leg7, p) == 7 for p in (3, 5, 7, 11))


def test_corollary_sweep_small():
    for s in [gen_legendre(p) for p in (3, 7, 11, 19, 23, 31)] + [gen_m_sequence(n) for n in range(2, 7)]:
        for t in (s, complement(s)):
            for p in (3, 5, 7, 11, 13):
                want = corollary_prediction(t, p)
                if want is not None:
                    assert lc_by_rank(list(t.bits), p) == want
