"""Independent oracles shared by the test modules.

None of these call into the package's own algorithms.
"""

import random

import pytest

from twoadic.sequences import BinarySequence


def brute_autocorrelation(bits):
    n = len(bits)
    return [sum((-1) ** (bits[i] + bits[(i + t) % n]) for i in range(n)) for t in range(n)]


def brute_shift_counts(support, n):
    s = set(support)
    return [len(s & {(x + t) % n for x in s}) for t in range(n)]


def rank_mod_p(rows, p):
    """Rank of an integer matrix over GF(p) by plain Gaussian elimination."""
    m = [[x % p for x in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def circulant_rows(bits):
    n = len(bits)
    return [[bits[(i - j) % n] for j in range(n)] for i in range(n)]


def lc_by_rank(bits, p):
    """Linear complexity of a periodic sequence = rank of its circulant over GF(p)."""
    return rank_mod_p(circulant_rows(bits), p)


def two_adic_bits(num, den, k):
    """First k bits of num/den as a 2-adic integer, by modular inversion."""
    x = num * pow(den, -1, 1 << k) % (1 << k)
    return [(x >> i) & 1 for i in range(k)]


def fraction_det(rows):
    """Exact determinant by Gaussian elimination over the rationals."""
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return int(det)


@pytest.fixture
def rng():
    return random.Random(12345)


def random_seq(rng, lo, hi):
    n = rng.randint(lo, hi)
    return BinarySequence(tuple(rng.getrandbits(1) for _ in range(n)))
