"""Cyclotomic classes, Legendre symbols, two-squares and Gauss periods.

The period sums are evaluated numerically with mpmath and then checked
against their closed forms; nothing here works in an exact cyclotomic
field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import mpmath

from .numtheory import is_prime, is_primitive_root

__all__ = [
    "CyclotomicTable",
    "TwoSquares",
    "PeriodCheckError",
    "canonical_primitive_root",
    "cyclotomic_table",
    "legendre_symbol",
    "two_squares",
    "gauss_periods",
    "quadratic_period_values",
    "quartic_period_product",
    "quartic_product_closed_form",
    "quartic_gauss_sum",
]


class PeriodCheckError(ArithmeticError):
    """A numerically evaluated period sum missed its closed form."""


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def canonical_primitive_root(p: int) -> int:
    """Smallest positive primitive root of the prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    g = 2
    while not is_primitive_root(g, p):
        g += 1
    return g


@dataclass(frozen=True)
class CyclotomicTable:
    p: int
    d: int
    generator: int
    class_of: dict[int, int]

    def cls(self, i: int) -> frozenset[int]:
        """The residues in class ``D_i``."""
        return frozenset(x for x, c in self.class_of.items() if c == i % self.d)

    @property
    def classes(self) -> list[frozenset[int]]:
        return [self.cls(i) for i in range(self.d)]


def cyclotomic_table(p: int, d: int, generator: int | None = None) -> CyclotomicTable:
    """Cyclotomic classes of order ``d`` mod ``p``.

    ``x`` lands in class ``i`` when its discrete log to ``generator`` (default:
    the canonical primitive root) is congruent to ``i`` mod ``d``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1 or (p - 1) % d:
        raise ValueError(f"order {d} does not divide p - 1 = {p - 1}")
    g = canonical_primitive_root(p) if generator is None else generator
    if not is_primitive_root(g, p) and p > 2:
        raise ValueError(f"{g} is not a primitive root of {p}")
    class_of = {}
    x = 1
    for k in range(p - 1):
        class_of[x] = k % d
        x = x * g % p
    return CyclotomicTable(p, d, g, class_of)


def legendre_symbol(x: int, p: int) -> int:
    """Euler's criterion mapped to -1, 0, 1."""
    _require_odd_prime(p)
    t = pow(x % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


@dataclass(frozen=True)
class TwoSquares:
    """``a**2 + b**2 == p`` with ``a`` odd and ``a = -(2|p) mod 4``."""

    a: int
    b: int
    p: int


def two_squares(p: int) -> TwoSquares:
    """Decompose a prime ``p = 1 mod 4`` with the sign of ``a`` normalized."""
    _require_odd_prime(p)
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    target = (-legendre_symbol(2, p)) % 4
    for b in range(0, isqrt(p) + 1, 2):
        a2 = p - b * b
        a = isqrt(a2)
        if a * a == a2 and a % 2 == 1:
            if a % 4 != target:
                a = -a
            return TwoSquares(a, b, p)
    raise AssertionError(f"no two-squares decomposition found for {p}")


def _precision_bits(p: int) -> int:
    return max(64, 24 + 4 * p.bit_length())


def gauss_periods(p: int, d: int, generator: int | None = None) -> list[mpmath.mpc]:
    """``B_i = sum(exp(2 pi i x / p) for x in D_i)`` for each class of order d."""
    table = cyclotomic_table(p, d, generator)
    with mpmath.workprec(_precision_bits(p)):
        sums = [mpmath.mpc(0)] * d
        for x, c in table.class_of.items():
            sums[c] += mpmath.expjpi(mpmath.mpf(2 * x) / p)
        return [+s for s in sums]


def quadratic_period_values(p: int, tol: float = 1e-12) -> tuple[float, float]:
    """Real parts of the quadratic periods ``B_0, B_1`` for ``p = 1 mod 4``.

    Raises :class:`PeriodCheckError` unless ``B_0 = (sqrt(p)-1)/2`` and
    ``B_1 = -(sqrt(p)+1)/2`` within ``tol``.
    """
    _require_odd_prime(p)
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    b0, b1 = gauss_periods(p, 2)
    with mpmath.workprec(_precision_bits(p)):
        root = mpmath.sqrt(p)
        err0 = abs(b0 - (root - 1) / 2)
        err1 = abs(b1 + (root + 1) / 2)
    if err0 > tol or err1 > tol:
        raise PeriodCheckError(f"p={p}: quadratic periods off by {float(err0)}, {float(err1)}")
    return float(b0.real), float(b1.real)


def quartic_product_closed_form(p: int) -> int:
    """``1 - 2p + a^2 p`` when p = 1 mod 8, ``1 + 2p + a^2 p`` when p = 5 mod 8."""
    a = two_squares(p).a
    sign = -1 if p % 8 == 1 else 1
    return 1 + sign * 2 * p + a * a * p


def quartic_period_product(p: int) -> int:
    """``16 (B0+B1)(B1+B2)(B2+B3)(B3+B0)`` rounded to the nearest integer.

    The rounding residual must be below 1/2 and the result must equal
    :func:`quartic_product_closed_form`; either failure raises
    :class:`PeriodCheckError`.
    """
    _require_odd_prime(p)
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    b = gauss_periods(p, 4)
    with mpmath.workprec(_precision_bits(p)):
        prod = 16 * (b[0] + b[1]) * (b[1] + b[2]) * (b[2] + b[3]) * (b[3] + b[0])
        rounded = int(mpmath.nint(prod.real))
        residual = abs(prod - rounded)
    if residual >= 0.5:
        raise PeriodCheckError(f"p={p}: product {prod} not within 1/2 of an integer")
    expected = quartic_product_closed_form(p)
    if rounded != expected:
        raise PeriodCheckError(f"p={p}: period product {rounded} != closed form {expected}")
    return rounded


def quartic_gauss_sum(p: int) -> mpmath.mpc:
    """``G(lambda; 1)`` for the quartic character with ``lambda(g) = i``."""
    b = gauss_periods(p, 4)
    with mpmath.workprec(_precision_bits(p)):
        unit = [1, 1j, -1, -1j]
        return sum((unit[k] * b[k] for k in range(4)), mpmath.mpc(0))
