"""Verification suites: each sweeps a parameter range and records both sides
of every identity it checks.

A suite returns a :class:`SuiteResult`; ``rows`` holds one dict per instance
and ``failures`` the subset that violated something.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import mpmath

from . import adic, circulant, fieldlc, gauss
from .numtheory import primes_upto
from .sequences import (
    BinarySequence,
    autocorrelation_profile,
    complement,
    gen_dhl,
    gen_hall_sextic,
    gen_legendre,
    gen_m_sequence,
    gen_twin_prime,
)

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suite",
    "random_sequence",
    "ideal_sequences",
    "TWIN_PRODUCTS",
    "HALL_PRIMES",
]

TWIN_PRODUCTS = (15, 35, 143, 323, 899)
HALL_PRIMES = (31, 43, 127, 283)


@dataclass
class SuiteResult:
    name: str
    bound: int
    rows: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, row: dict) -> None:
        self.rows.append(row)
        if not row.get("ok", True):
            self.failures.append(row)


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def random_sequence(rng: random.Random, max_n: int, min_n: int = 1) -> BinarySequence:
    n = rng.randint(min_n, max_n)
    return BinarySequence(tuple(rng.getrandbits(1) for _ in range(n)))


def _twin_p(n: int) -> int:
    p = 1
    while p * (p + 2) < n:
        p += 2
    return p


def ideal_sequences(max_period: int, m_max: int = 16) -> list[tuple[str, int, BinarySequence]]:
    """Every generated ideal-autocorrelation sequence with period below ``max_period``."""
    out = []
    for p in primes_upto(max_period - 1):
        if p % 4 == 3:
            out.append(("legendre", p, gen_legendre(p)))
    for n in range(2, m_max + 1):
        if (1 << n) - 1 < max_period:
            out.append(("mseq", n, gen_m_sequence(n)))
    for n in TWIN_PRODUCTS:
        if n < max_period:
            p = _twin_p(n)
            out.append(("twinprime", p, gen_twin_prime(p)))
    for p in HALL_PRIMES:
        if p < max_period:
            out.append(("hall", p, gen_hall_sextic(p)))
    return out


def suite_ideal_ac(bound: int, jobs: int = 1, seed: int = 0, m_max: int = 16,
                   twin_products: Iterable[int] = TWIN_PRODUCTS,
                   hall_primes: Iterable[int] = (31, 43, 127)) -> SuiteResult:
    """AC equals the period for Legendre p = 3 mod 4 below ``bound``, m-sequences
    up to degree ``m_max``, the twin-prime products and the Hall primes."""
    cases: list[tuple[str, int, Callable[[int], BinarySequence]]] = []
    cases += [("legendre", p, gen_legendre) for p in primes_upto(bound - 1) if p % 4 == 3]
    cases += [("twinprime", _twin_p(n), gen_twin_prime) for n in twin_products]
    cases += [("mseq", n, gen_m_sequence) for n in range(2, m_max + 1)]
    cases += [("hall", p, gen_hall_sextic) for p in hall_primes]

    def one(case):
        family, param, gen = case
        s = gen(param)
        ac = adic.two_adic_complexity(s)
        return {"family": family, "param": param, "N": s.period, "AC": ac, "ok": ac == s.period}

    result = SuiteResult("ideal_ac", bound)
    for row in _pmap(one, cases, jobs):
        result.add(row)
    return result


def suite_legendre_1mod4(bound: int, jobs: int = 1, seed: int = 0) -> SuiteResult:
    """Legendre p = 1 mod 4: AC = p and |det(A)| matches the closed form."""
    def one(p):
        s = gen_legendre(p)
        ac = adic.two_adic_complexity(s)
        det = circulant.circulant_det_exact(s)
        want = circulant.det_closed_form_legendre(p)
        cert = adic.maximality_certificate(s, det)
        return {"p": p, "AC": ac, "det": det, "closed_form": want,
                "cert": cert, "ok": ac == p and abs(det) == want and cert}

    result = SuiteResult("legendre_1mod4", bound)
    for row in _pmap(one, [p for p in primes_upto(bound - 1) if p % 4 == 1], jobs):
        result.add(row)
    return result


def suite_dhl(bound: int, jobs: int = 1, seed: int = 0) -> SuiteResult:
    """Ding-Helleseth-Lam p = 1 mod 4: AC = p, quartic period product, gcd lemma.

    The autocorrelation class is recorded as computed, not assumed.
    """
    def one(p):
        s = gen_dhl(p)
        ac = adic.two_adic_complexity(s)
        plus, minus = adic.dhl_gcd_values(p)
        want = minus if p % 8 == 1 else plus
        try:
            got = gauss.quartic_period_product(p)
        except gauss.PeriodCheckError:
            got = None
        lemma = adic.dhl_gcd_lemma_check(p)
        return {"p": p, "a": gauss.two_squares(p).a, "1+2p+a2p": plus, "1-2p+a2p": minus,
                "period_product": got, "expected": want, "gcd_lemma": lemma, "AC": ac,
                "class": autocorrelation_profile(s).classification,
                "ok": ac == p and got == want and lemma}

    result = SuiteResult("dhl", bound)
    for row in _pmap(one, [p for p in primes_upto(bound - 1) if p % 4 == 1], jobs):
        result.add(row)
    return result


def suite_lemma5(bound: int, jobs: int = 1, seed: int = 0,
                 twin_products: Iterable[int] = (15, 35)) -> SuiteResult:
    """Every prime factor of 2^N - 1 is at least p + 2 (N = p, or N = p(p+2))."""
    cases = [(p, "prime_p") for p in primes_upto(bound) if p > 2]
    cases += [(n, "twin_product") for n in twin_products]

    def one(case):
        n, mode = case
        chk = adic.mersenne_factor_bound_check(n, mode)
        factors = sorted(r for r, e in chk.factors.items() for _ in range(e))
        return {"N": n, "mode": mode, "p": chk.p, "factors": factors,
                "status": chk.status, "ok": chk.holds is True}

    result = SuiteResult("lemma5", bound)
    for row in _pmap(one, cases, jobs):
        result.add(row)
    return result


def suite_gauss(bound: int, jobs: int = 1, seed: int = 0, tol: float = 1e-12) -> SuiteResult:
    """Numeric checks of the quadratic and quartic period identities."""
    def one(p):
        ts = gauss.two_squares(p)
        leg2 = gauss.legendre_symbol(2, p)
        squares_ok = ts.a ** 2 + ts.b ** 2 == p and ts.a % 2 == 1 and ts.a % 4 == (-leg2) % 4
        try:
            b0, b1 = gauss.quadratic_period_values(p, tol)
            quad_ok = abs(1 + b0 + b1) < tol
        except gauss.PeriodCheckError:
            quad_ok = False
        periods = gauss.gauss_periods(p, 4)
        g = gauss.quartic_gauss_sum(p)
        # G(l^3) = l(-1) conj(G(l)); l(-1) = 1 iff p = 1 mod 8
        g3 = g.conjugate() if p % 8 == 1 else -g.conjugate()
        with mpmath.workprec(128):
            root = mpmath.sqrt(p)
            sum_ok = abs(1 + sum(periods)) < tol
            abs_ok = abs(abs(g) - root) < tol
            pair = (g + g3) ** 2
            pair_ok = abs(pair - 2 * leg2 * (p + ts.a * root)) < tol * p
        try:
            prod = gauss.quartic_period_product(p)
            prod_ok = prod % p == 1
        except gauss.PeriodCheckError:
            prod, prod_ok = None, False
        ok = squares_ok and quad_ok and sum_ok and abs_ok and pair_ok and prod_ok
        return {"p": p, "a": ts.a, "b": ts.b, "two_squares": squares_ok, "quadratic": quad_ok,
                "quartic_sum": sum_ok, "|G|=sqrt(p)": abs_ok, "G+G3": pair_ok,
                "product": prod, "ok": ok}

    result = SuiteResult("gauss", bound)
    for row in _pmap(one, [p for p in primes_upto(bound - 1) if p % 4 == 1], jobs):
        result.add(row)
    return result


def suite_bezout(bound: int, jobs: int = 1, seed: int = 0, count: int = 200) -> SuiteResult:
    """Integral Bezout witnesses for ``count`` seeded random sequences, N <= bound."""
    rng = random.Random(seed)
    seqs = []
    while len(seqs) < count:
        s = random_sequence(rng, bound)
        if circulant.circulant_det_exact(s) != 0:
            seqs.append(s)

    def one(s):
        try:
            w = circulant.bezout_witness(s)
        except ArithmeticError as exc:
            return {"seq": str(s), "error": str(exc), "ok": False}
        replay = w.replay(s)
        u2, v2 = w.at(2)
        at2 = u2 * s.to_int() + v2 * (1 - (1 << s.period))
        ok = replay == [w.det_value] and at2 == w.det_value
        return {"seq": str(s), "N": s.period, "det": w.det_value, "replay": replay[:3],
                "at_2": at2, "ok": ok}

    result = SuiteResult("bezout", bound)
    for row in _pmap(one, seqs, jobs):
        result.add(row)
    return result


def suite_lc_corollary(bound: int, jobs: int = 1, seed: int = 0, prime_limit: int = 100) -> SuiteResult:
    """Predicted LC_p for ideal sequences (and complements) with N < bound."""
    odd_primes = [p for p in primes_upto(prime_limit - 1) if p > 2]
    cases = []
    for family, param, s in ideal_sequences(bound):
        for label, seq in ((family, s), (family + "~", complement(s))):
            for p in odd_primes:
                want = fieldlc.corollary_prediction(seq, p, assume_ideal=True)
                if want is not None:
                    cases.append((label, param, seq, p, want))

    def one(case):
        label, param, seq, p, want = case
        lc = fieldlc.lc_prime_field(seq, p).lc
        return {"family": label, "param": param, "N": seq.period, "weight": seq.weight,
                "p": p, "LC_p": lc, "predicted": want, "ok": lc == want}

    result = SuiteResult("lc_corollary", bound)
    for row in _pmap(one, cases, jobs):
        result.add(row)
    return result


def suite_determinant(bound: int, jobs: int = 1, seed: int = 0, count: int = 1000) -> SuiteResult:
    """Exact, spectral and closed-form determinants agree on random sequences."""
    rng = random.Random(seed)
    seqs = [random_sequence(rng, bound) for _ in range(count)]

    def one(s):
        n = s.period
        closed = None
        if n % 4 == 3 and s.weight == (n + 1) // 2:
            cert = autocorrelation_profile(s)
            if cert.classification == "ideal":
                closed = circulant.det_closed_form_ideal(n)
        try:
            rep = circulant.circulant_report(s, closed)
        except circulant.SpectralPrecisionError as exc:
            return {"seq": str(s), "error": str(exc), "ok": False}
        return {"seq": str(s), "N": n, "exact": rep.det_exact, "spectral": rep.det_spectral,
                "residual": rep.spectral_error, "closed_form": closed,
                "ok": rep.agree and rep.spectral_error < 0.5}

    result = SuiteResult("determinant", bound)
    for row in _pmap(one, seqs, jobs):
        result.add(row)
    return result


def balanced_even_sequence(rng: random.Random, max_n: int) -> BinarySequence:
    """Random even-period sequence with as many ones at even as at odd positions."""
    half = rng.randint(1, max_n // 2)
    k = rng.randint(0, half)
    evens = rng.sample(range(0, 2 * half, 2), k)
    odds = rng.sample(range(1, 2 * half, 2), k)
    return BinarySequence.from_support(evens + odds, 2 * half)


def suite_degenerate(bound: int, jobs: int = 1, seed: int = 0, count: int = 100) -> SuiteResult:
    """Even-period sequences with ``P_s(-1) = 0`` have a singular circulant."""
    rng = random.Random(seed)
    seqs = [balanced_even_sequence(rng, bound) for _ in range(count)]

    def one(s):
        pm1 = sum((-1) ** i for i in s.support)
        det = circulant.circulant_det_exact(s)
        return {"seq": str(s), "N": s.period, "P(-1)": pm1, "det": det, "ok": pm1 == 0 and det == 0}

    result = SuiteResult("degenerate", bound)
    for row in _pmap(one, seqs, jobs):
        result.add(row)
    return result


def suite_roundtrip(bound: int, jobs: int = 1, seed: int = 0, count: int = 200) -> SuiteResult:
    """FCSR regeneration of the 2-adic fraction, plus complement/shift invariance of AC."""
    rng = random.Random(seed)
    cases = [(random_sequence(rng, bound), rng.randrange(1 << 30)) for _ in range(count)]

    def one(case):
        s, k = case
        prof = adic.two_adic_fraction(s)
        regen = adic.regenerate(prof, 2 * s.period)
        shifted = adic.two_adic_fraction(s.shifted(k))
        comp = adic.two_adic_fraction(complement(s))
        ok = (regen == list(s.bits) * 2 and shifted.denominator == prof.denominator
              and comp.complexity == prof.complexity)
        return {"seq": str(s), "num": prof.numerator, "den": prof.denominator,
                "AC": prof.complexity, "shift_den": shifted.denominator,
                "complement_AC": comp.complexity, "ok": ok}

    result = SuiteResult("roundtrip", bound)
    for row in _pmap(one, cases, jobs):
        result.add(row)
    return result


def suite_lc_agreement(bound: int, jobs: int = 1, seed: int = 0, count: int = 1000,
                       primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)) -> SuiteResult:
    """gcd-route LC equals Berlekamp-Massey LC on seeded random (s, p) pairs."""
    rng = random.Random(seed)
    cases = [(random_sequence(rng, bound), rng.choice(primes)) for _ in range(count)]

    def one(case):
        s, p = case
        rep = fieldlc.lc_prime_field(s, p, cross_check=False)
        bm = fieldlc.berlekamp_massey(s, p)
        return {"seq": str(s), "p": p, "gcd_lc": rep.lc, "bm_lc": bm, "ok": rep.lc == bm}

    result = SuiteResult("lc_agreement", bound)
    for row in _pmap(one, cases, jobs):
        result.add(row)
    return result


def suite_worked_examples(bound: int = 0, jobs: int = 1, seed: int = 0) -> SuiteResult:
    """The period-5 examples: 11000 over GF(2), GF(3) and 11010 over GF(3)."""
    result = SuiteResult("worked_examples", bound)
    for text, p, want in (("11000", 2, 4), ("11000", 3, 5), ("11010", 3, 4)):
        lc = fieldlc.lc_prime_field(BinarySequence.from_string(text), p).lc
        result.add({"seq": text, "p": p, "LC_p": lc, "expected": want, "ok": lc == want})
    s = BinarySequence.from_string("11000")
    w = fieldlc.integer_gcd_witness(s)
    # both 1+x and 1-x^5 are even at odd x, so any a must be even
    parity = all((1 + x) % 2 == 0 and (1 - x**5) % 2 == 0 for x in range(-9, 10, 2))
    result.add({"seq": "11000", "g": list(w.g_coeffs), "a": w.a, "u": list(w.u_coeffs),
                "v": list(w.v_coeffs), "ok": w.g_coeffs == (1,) and w.a % 2 == 0 and parity})
    s = BinarySequence.from_string("11010")
    w = fieldlc.integer_gcd_witness(s)
    lc3 = fieldlc.lc_prime_field(s, 3).lc
    result.add({"seq": "11010", "g": list(w.g_coeffs), "a": w.a, "LC_3": lc3,
                "bound": s.period - w.g_degree,
                "ok": w.g_degree == 0 and lc3 == 4 and w.a % 3 == 0 and fieldlc.theorem5_check(s, 3, w)})
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "ideal_ac": suite_ideal_ac,
    "legendre_1mod4": suite_legendre_1mod4,
    "dhl": suite_dhl,
    "lemma5": suite_lemma5,
    "gauss": suite_gauss,
    "bezout": suite_bezout,
    "lc_corollary": suite_lc_corollary,
    "determinant": suite_determinant,
    "degenerate": suite_degenerate,
    "roundtrip": suite_roundtrip,
    "lc_agreement": suite_lc_agreement,
    "worked_examples": suite_worked_examples,
}


def run_suite(name: str, bound: int, jobs: int = 1, seed: int = 0) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(bound, jobs=jobs, seed=seed)
