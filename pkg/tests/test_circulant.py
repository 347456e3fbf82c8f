import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import circulant_rows, fraction_det
from twoadic.circulant import (
    SingularCirculant,
    SizeBoundExceeded,
    bareiss_det,
    bezout_system,
    bezout_witness,
    circulant_det_exact,
    circulant_det_spectral,
    circulant_matrix,
    circulant_report,
    det_closed_form_ideal,
    det_closed_form_legendre,
    gram_det,
    poly_mul,
)
from twoadic.sequences import BinarySequence, complement, gen_legendre, gen_m_sequence, gen_twin_prime

B = BinarySequence.from_string
bit_lists = st.lists(st.integers(0, 1), min_size=1, max_size=40)


def test_matrix_layout():
    a = circulant_matrix(B("110"))
    assert a.tolist() == [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    assert a.tolist() == circulant_rows([1, 1, 0])


@pytest.mark.parametrize("text", ["01001", "11000", "0110100", "1", "0", "1010", "111010010"])
def test_exact_det_examples(text):
    bits = [int(c) for c in text]
    want = fraction_det(circulant_rows(bits))
    assert circulant_det_exact(B(text)) == want
    assert want == int(sympy.Matrix(circulant_rows(bits)).det())


def test_known_values():
    assert circulant_det_exact(B("01001")) == 2
    assert abs(circulant_det_exact(gen_m_sequence(3))) == 32
    assert circulant_det_exact(B("1010")) == 0


@settings(max_examples=100)
@given(bit_lists)
def test_exact_and_spectral_match_oracle(bits):
    s = BinarySequence(tuple(bits))
    exact = circulant_det_exact(s)
    assert exact == fraction_det(circulant_rows(bits))
    rounded, err = circulant_det_spectral(s)
    assert rounded == exact and err < 0.5


@settings(max_examples=50)
@given(bit_lists, st.integers(0, 100))
def test_abs_det_shift_invariant(bits, k):
    s = BinarySequence(tuple(bits))
    assert abs(circulant_det_exact(s.shifted(k))) == abs(circulant_det_exact(s))


@given(st.lists(st.integers(0, 1), min_size=1, max_size=20).map(lambda b: b * 2))
def test_doubled_pattern_is_singular(bits):
    # a repeated block makes rows repeat, so A is singular whenever N > 1 block copies
    assert circulant_det_exact(BinarySequence(tuple(bits))) == 0


def test_bareiss_matches_sympy():
    rows = [[3, -1, 4, 1], [5, 9, -2, 6], [5, 3, 5, -8], [9, 7, 9, 3]]
    assert bareiss_det(rows) == int(sympy.Matrix(rows).det())
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_closed_forms():
    assert det_closed_form_ideal(7) == 4 * 2**3
    assert det_closed_form_legendre(5) == 2
    assert det_closed_form_legendre(13) == 6 * 3**6
    for n in (7, 11, 15, 19, 23, 31):
        s = gen_legendre(n) if sympy.isprime(n) else gen_twin_prime(3) if n == 15 else gen_m_sequence(5)
        if s.weight == (n - 1) // 2:
            # the closed form is for the (N+1)/2 side; the other side gives (N-1)/2 * ((N+1)/4)^((N-1)/2)
            assert abs(circulant_det_exact(s)) == (n - 1) // 2 * ((n + 1) // 4) ** ((n - 1) // 2)
            s = complement(s)
        assert abs(circulant_det_exact(s)) == det_closed_form_ideal(n)
    for p in (5, 13, 17, 29, 37):
        assert abs(circulant_det_exact(gen_legendre(p))) == det_closed_form_legendre(p)
    with pytest.raises(ValueError):
        det_closed_form_ideal(9)
    with pytest.raises(ValueError):
        det_closed_form_legendre(7)


def test_gram_det_matches_direct():
    rows = [[5 if i == j else 2 for j in range(7)] for i in range(7)]
    assert gram_det(5, 2, 7) == fraction_det(rows)
    with pytest.raises(ValueError):
        gram_det(1, 1, 0)


def test_report():
    rep = circulant_report(gen_legendre(13), det_closed_form_legendre(13))
    assert rep.agree and rep.det_exact == rep.det_spectral and rep.spectral_error < 0.5
    assert not circulant_report(gen_legendre(13), 1).agree


def test_size_bound():
    s = BinarySequence((1,) + (0,) * 20)
    with pytest.raises(SizeBoundExceeded):
        circulant_det_exact(s, bound=20)
    with pytest.raises(SizeBoundExceeded):
        circulant_det_spectral(s, bound=20)
    assert circulant_det_exact(s, bound=21) == 1


def test_poly_mul():
    assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]
    assert poly_mul([], [1]) == []


def test_bezout_example():
    s = B("01001")
    w = bezout_witness(s)
    assert w.det_value == 2
    assert w.replay(s) == [2]
    u2, v2 = w.at(2)
    assert u2 * 18 + v2 * (1 - 32) == 2


@settings(max_examples=60)
@given(bit_lists)
def test_bezout_witness_properties(bits):
    s = BinarySequence(tuple(bits))
    det = circulant_det_exact(s)
    if det == 0:
        with pytest.raises(SingularCirculant):
            bezout_witness(s)
        return
    w = bezout_witness(s)
    assert w.det_value == det
    assert w.replay(s) == [det]
    n = s.period
    assert len(w.u_coeffs) == n and len(w.v_coeffs) == n - 1
    system = bezout_system(s)
    x = list(w.u_coeffs) + list(w.v_coeffs)
    rhs = [det] + [0] * (2 * n - 2)
    assert [sum(system[r, c] * x[c] for c in range(2 * n - 1)) for r in range(2 * n - 1)] == rhs
    u2, v2 = w.at(2)
    assert u2 * s.to_int() + v2 * (1 - (1 << n)) == det


def test_balanced_even_sequences_are_singular():
    # P_s(-1) = 0 puts a root of 1 - x^N into P_s
    for text in ("1100", "100100", "111001", "10000100"):
        bits = [int(c) for c in text]
        assert sum((-1) ** i * b for i, b in enumerate(bits)) == 0
        assert circulant_det_exact(B(text)) == 0
