"""Linear complexity of binary sequences read over a prime field.

Over GF(p), ``sum(s_i x^i) = P_s(x) / (1 - x^N)``, so the linear complexity is
``N - deg gcd(P_s, 1 - x^N)``. Berlekamp-Massey on two periods serves as an
independent check. Over the rationals the same gcd comes with an integer
witness ``u P_s + v (1 - x^N) = a g``; primes dividing ``a`` are exactly where
reduction mod p may enlarge the gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .numtheory import FactorizationIncomplete, factorize, is_prime
from .sequences import BinarySequence, autocorrelation_profile

__all__ = [
    "LinearComplexityReport",
    "IntegerGcdWitness",
    "poly_gcd_mod_p",
    "lc_prime_field",
    "berlekamp_massey",
    "integer_gcd_witness",
    "theorem5_check",
    "corollary_prediction",
    "ideal_lc_corollary_check",
]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dtype(p: int):
    # int64 dot products stay exact while len * p**2 < 2**63
    return np.int64 if p < 1 << 20 else object


def _strip(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _polymod_p(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = a.copy()
    inv = pow(int(b[-1]), -1, p)
    db = len(b) - 1
    for top in range(len(a) - 1, db - 1, -1):
        coef = int(a[top]) * inv % p
        if coef:
            lo = top - db
            a[lo : top + 1] = (a[lo : top + 1] - coef * b) % p
    return _strip(a[:db])


def poly_gcd_mod_p(a, b, p: int) -> list[int]:
    """Monic gcd over GF(p); coefficient lists lowest degree first."""
    dt = _dtype(p)
    a = _strip(np.array([x % p for x in a], dtype=dt))
    b = _strip(np.array([x % p for x in b], dtype=dt))
    while b.size:
        a, b = b, _polymod_p(a, b, p)
    if not a.size:
        return []
    inv = pow(int(a[-1]), -1, p)
    return [int(x) * inv % p for x in a]


def _one_minus_xn(n: int) -> list[int]:
    return [1] + [0] * (n - 1) + [-1]


def berlekamp_massey(s: BinarySequence, p: int) -> int:
    """Shortest linear recurrence over GF(p) generating two periods of ``s``."""
    _require_prime(p)
    dt = _dtype(p)
    seq = np.array(s.bits * 2, dtype=dt)
    total = len(seq)
    c = np.zeros(total + 1, dtype=dt)
    b = np.zeros(total + 1, dtype=dt)
    c[0] = b[0] = 1
    length, m, last = 0, 1, 1
    for n in range(total):
        # discrepancy: sum_{i=0..L} c_i s_{n-i}
        d = int(np.dot(c[: length + 1], seq[n - length : n + 1][::-1]) % p)
        if d == 0:
            m += 1
            continue
        coef = d * pow(last, -1, p) % p
        t = c.copy() if 2 * length <= n else None
        c[m:] = (c[m:] - coef * b[: total + 1 - m]) % p
        if t is not None:
            length, b, last, m = n + 1 - length, t, d, 1
        else:
            m += 1
    return length


@dataclass(frozen=True)
class LinearComplexityReport:
    field_char: int
    lc: int
    gcd_degree: int
    bm_lc: int


def lc_prime_field(s: BinarySequence, p: int, cross_check: bool = True) -> LinearComplexityReport:
    """``LC_p(s) = N - deg gcd(P_s, 1 - x^N)`` over GF(p), checked by Berlekamp-Massey."""
    _require_prime(p)
    n = s.period
    g = poly_gcd_mod_p(list(s.bits), _one_minus_xn(n), p)
    deg = len(g) - 1
    lc = n - deg
    bm = berlekamp_massey(s, p) if cross_check else lc
    if bm != lc:
        raise AssertionError(f"gcd route gives {lc}, Berlekamp-Massey gives {bm} over GF({p})")
    return LinearComplexityReport(p, lc, deg, bm)


@dataclass(frozen=True)
class IntegerGcdWitness:
    g_coeffs: tuple[int, ...]
    a: int
    u_coeffs: tuple[int, ...]
    v_coeffs: tuple[int, ...]
    a_factors: dict[int, int] | None

    @property
    def g_degree(self) -> int:
        return len(self.g_coeffs) - 1


def _q_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        coef = a[-1] / b[-1]
        shift = len(a) - 1 - db
        quot[shift] = coef
        for i, c in enumerate(b):
            a[shift + i] -= coef * c
        a.pop()
        _trim(a)
    return _trim(quot), a


def _q_sub_mul(x: list[Fraction], q: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    # x - q*y
    out = x[:] + [Fraction(0)] * max(0, len(q) + len(y) - 1 - len(x))
    for i, qi in enumerate(q):
        if qi:
            for j, yj in enumerate(y):
                out[i + j] -= qi * yj
    return _trim(out)


def integer_gcd_witness(s: BinarySequence) -> IntegerGcdWitness:
    """``u P_s + v (1 - x^N) = a g`` with ``g`` the monic rational gcd.

    Extended Euclid over the rationals, then ``u`` and ``v`` are cleared of
    denominators; ``a`` is the resulting lcm and is not minimal in general.
    """
    n = s.period
    r0 = _trim([Fraction(b) for b in s.bits])
    r1 = [Fraction(c) for c in _one_minus_xn(n)]
    # invariant: r_i = u_i * P_s + v_i * (1 - x^N)
    u0, v0 = [Fraction(1)], []
    u1, v1 = [], [Fraction(1)]
    while r1:
        q, rem = _q_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _q_sub_mul(u0, q, u1)
        v0, v1 = v1, _q_sub_mul(v0, q, v1)
    lead = r0[-1]
    g = [c / lead for c in r0]
    u = [c / lead for c in u0]
    v = [c / lead for c in v0]
    if any(c.denominator != 1 for c in g):
        raise ArithmeticError("monic rational gcd has non-integer coefficients")
    a = lcm(1, *(c.denominator for c in u + v))
    try:
        factors = dict(factorize(a))
    except FactorizationIncomplete:
        factors = None
    return IntegerGcdWitness(
        tuple(int(c) for c in g),
        a,
        tuple(int(c * a) for c in u),
        tuple(int(c * a) for c in v),
        factors,
    )


def theorem5_check(s: BinarySequence, p: int, witness: IntegerGcdWitness | None = None) -> bool:
    """``LC_p(s) <= N - deg g``, with equality whenever ``p`` does not divide ``a``."""
    _require_prime(p)
    w = integer_gcd_witness(s) if witness is None else witness
    lc = lc_prime_field(s, p).lc
    bound = s.period - w.g_degree
    if lc > bound:
        return False
    if w.a % p and lc != bound:
        return False
    return True


def corollary_prediction(s: BinarySequence, p: int, assume_ideal: bool = False) -> int | None:
    """LC over GF(p) predicted for an ideal-autocorrelation sequence, or None.

    None means none of the three cases applies to ``(|D_s|, p)``.
    """
    _require_prime(p)
    if p == 2:
        raise ValueError("the prediction is for odd primes")
    if not assume_ideal and autocorrelation_profile(s).classification != "ideal":
        raise ValueError("sequence does not have ideal autocorrelation")
    n, k = s.period, s.weight
    if k == (n + 1) // 2 and (n + 1) % p:
        return n
    if k == (n - 1) // 2:
        if (n + 1) % p and (n - 1) % p == 0:
            return n - 1
        if (n * n - 1) % p:
            return n
    return None


def ideal_lc_corollary_check(s: BinarySequence, p: int, assume_ideal: bool = False) -> bool | None:
    """Compare ``LC_p(s)`` with :func:`corollary_prediction`; None if no case applies."""
    want = corollary_prediction(s, p, assume_ideal)
    if want is None:
        return None
    return lc_prime_field(s, p).lc == want
