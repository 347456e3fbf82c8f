"""2-adic complexity and the gcd certificates built on circulant determinants.

For a period-``N`` sequence, ``sum(s_i 2**i) = M / (1 - 2**N)`` with
``M = P_s(2)``. The reduced denominator ``q`` gives ``AC(s) = floor(log2(q+1))``.
A nonzero circulant determinant coprime to ``2**N - 1`` forces ``q = 2**N - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .gauss import two_squares
from .numtheory import FactorizationIncomplete, factorize, is_prime
from .registers import fcsr_generate, fcsr_init_from_fraction
from .sequences import BinarySequence

__all__ = [
    "TwoAdicProfile",
    "CertificateInapplicable",
    "MersenneCheck",
    "two_adic_fraction",
    "two_adic_complexity",
    "regenerate",
    "maximality_certificate",
    "ac_lower_bound_from_det",
    "mersenne_factor_bound_check",
    "dhl_gcd_values",
    "dhl_gcd_lemma_check",
]

DEGENERATE_NOTE = (
    "all-zero sequence: fraction 0/1, AC reported as floor(log2(1+1)) = 1 "
    "by the uniform formula (some authors use 0)"
)


class CertificateInapplicable(ValueError):
    """The determinant is zero, so the gcd certificate says nothing."""


@dataclass(frozen=True)
class TwoAdicProfile:
    numerator: int
    denominator: int
    complexity: int

    @property
    def is_degenerate(self) -> bool:
        return self.numerator == 0


def _floor_log2(x: int) -> int:
    return x.bit_length() - 1


def two_adic_fraction(s: BinarySequence) -> TwoAdicProfile:
    """Reduced 2-adic value ``num/den`` of ``s`` and its 2-adic complexity."""
    mersenne = (1 << s.period) - 1
    m = s.to_int()
    d = gcd(m, mersenne)
    den = mersenne // d
    return TwoAdicProfile(-m // d, den, _floor_log2(den + 1))


def two_adic_complexity(s: BinarySequence) -> int:
    return two_adic_fraction(s).complexity


def regenerate(profile: TwoAdicProfile, n: int) -> list[int]:
    """First ``n`` bits of the 2-adic expansion of ``profile``, via an FCSR.

    Denominator 1 means a constant stream (0 or -1); those are emitted
    directly since there is no FCSR with connection number 1.
    """
    if profile.denominator == 1:
        return [1 if profile.numerator else 0] * n
    state = fcsr_init_from_fraction(profile.numerator, profile.denominator)
    bits, _ = fcsr_generate(state, n)
    return bits


def maximality_certificate(s: BinarySequence, det: int) -> bool:
    """True when ``gcd(2**N - 1, det) == 1``, which forces ``AC(s) = N``.

    When the certificate holds the claim is cross-checked against the direct
    2-adic computation.
    """
    if det == 0:
        raise CertificateInapplicable("circulant determinant is zero")
    n = s.period
    ok = gcd((1 << n) - 1, abs(det)) == 1
    if ok and two_adic_fraction(s).complexity != n:
        raise AssertionError(f"certificate holds but AC(s) != {n}; det {det} is wrong")
    return ok


def ac_lower_bound_from_det(n: int, det: int) -> int:
    """``floor(log2((2**N - 1)/gcd(2**N - 1, det) + 1))``, a lower bound on AC."""
    if det == 0:
        raise CertificateInapplicable("circulant determinant is zero")
    mersenne = (1 << n) - 1
    return _floor_log2(mersenne // gcd(mersenne, abs(det)) + 1)


@dataclass(frozen=True)
class MersenneCheck:
    N: int
    p: int
    factors: dict[int, int]
    holds: bool | None
    complete: bool

    @property
    def status(self) -> str:
        if not self.complete:
            return "unverified"
        return "holds" if self.holds else "fails"


def mersenne_factor_bound_check(n: int, mode: str = "prime_p", max_n: int = 64) -> MersenneCheck:
    """Factor ``2**N - 1`` and test that every prime factor is at least ``p + 2``.

    ``mode="prime_p"`` takes ``N = p``; ``mode="twin_product"`` takes
    ``N = p(p+2)``. If factoring runs out of budget the result is marked
    incomplete and ``holds`` is None.
    """
    if mode == "prime_p":
        p = n
        if p < 3 or not is_prime(p):
            raise ValueError(f"{n} is not an odd prime")
    elif mode == "twin_product":
        p = isqrt(n + 1) - 1
        if p * (p + 2) != n or not (is_prime(p) and is_prime(p + 2)) or p < 3:
            raise ValueError(f"{n} is not a product of twin primes")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if n > max_n:
        return MersenneCheck(n, p, {}, None, False)
    try:
        factors = dict(factorize((1 << n) - 1))
    except FactorizationIncomplete as exc:
        return MersenneCheck(n, p, dict(exc.partial), None, False)
    return MersenneCheck(n, p, factors, all(r >= p + 2 for r in factors), True)


def dhl_gcd_values(p: int) -> tuple[int, int]:
    """``(1 + 2p + a^2 p, 1 - 2p + a^2 p)`` for the normalized two-squares ``a``."""
    a = two_squares(p).a
    return 1 + 2 * p + a * a * p, 1 - 2 * p + a * a * p


def dhl_gcd_lemma_check(p: int) -> bool:
    """Both ``1 ± 2p + a^2 p`` are coprime to ``2**p - 1``."""
    mersenne = (1 << p) - 1
    return all(gcd(abs(v), mersenne) == 1 for v in dhl_gcd_values(p))
