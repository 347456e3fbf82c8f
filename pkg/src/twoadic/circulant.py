"""Circulant determinants by three routes, and the integer Bezout witness.

The circulant of ``s`` is ``A[i, j] = s[(i - j) % N]``. Its determinant is
computed exactly by fraction-free elimination, numerically as the product of
``P_s`` over the N-th roots of unity, and (for difference-set sequences) from
a closed form. The witness ``u P_s + v (1 - x^N) = det(A)`` is obtained by
solving the coefficient system directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .numtheory import is_prime
from .sequences import BinarySequence

__all__ = [
    "DET_BOUND",
    "SizeBoundExceeded",
    "SpectralPrecisionError",
    "SingularCirculant",
    "CirculantReport",
    "BezoutWitness",
    "circulant_matrix",
    "bareiss_det",
    "circulant_det_exact",
    "circulant_det_spectral",
    "det_closed_form_ideal",
    "det_closed_form_legendre",
    "gram_det",
    "circulant_report",
    "bezout_system",
    "bezout_witness",
    "poly_mul",
]

DET_BOUND = 512


class SizeBoundExceeded(ValueError):
    pass


class SpectralPrecisionError(ArithmeticError):
    pass


class SingularCirculant(ValueError):
    """``det(A) = 0``: no Bezout witness with a nonzero constant exists."""


def circulant_matrix(s: BinarySequence) -> np.ndarray:
    n = s.period
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return s.as_array()[idx]


def _eliminate(m: np.ndarray, ncols: int) -> tuple[np.ndarray, int, int]:
    """Bareiss elimination on the first ``ncols`` columns of an object matrix.

    Returns the reduced matrix, the row-swap sign and the determinant of the
    leading square block (0 if singular). Every division is exact.
    """
    m = m.copy()
    sign, prev = 1, 1
    for k in range(ncols - 1):
        if m[k, k] == 0:
            nz = np.nonzero(m[k + 1 :, k])[0]
            if nz.size == 0:
                return m, sign, 0
            r = k + 1 + nz[0]
            m[[k, r]] = m[[r, k]]
            sign = -sign
        piv = m[k, k]
        m[k + 1 :, k + 1 :] = (piv * m[k + 1 :, k + 1 :] - np.outer(m[k + 1 :, k], m[k, k + 1 :])) // prev
        m[k + 1 :, k] = 0
        prev = piv
    return m, sign, sign * m[ncols - 1, ncols - 1]


def bareiss_det(rows) -> int:
    """Exact determinant of a square integer matrix."""
    m = np.array(rows, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if m.shape[0] == 0:
        return 1
    _, _, det = _eliminate(m, m.shape[0])
    return int(det)


def _check_bound(s: BinarySequence, bound: int) -> None:
    if s.period > bound:
        raise SizeBoundExceeded(f"period {s.period} exceeds determinant bound {bound}")


def circulant_det_exact(s: BinarySequence, bound: int = DET_BOUND) -> int:
    """Signed ``det(A)`` by fraction-free Gaussian elimination."""
    _check_bound(s, bound)
    return bareiss_det(circulant_matrix(s).astype(object))


def _spectral_prec(n: int) -> int:
    return n * n.bit_length() + 64


def circulant_det_spectral(s: BinarySequence, bound: int = DET_BOUND) -> tuple[int, float]:
    """``prod(P_s(w**j) for j in range(N))`` in extended precision.

    Returns the nearest integer and an upper bound on its distance from the
    true determinant: the propagated error of the product plus the rounding
    gap. Raises :class:`SpectralPrecisionError` if that bound reaches 1/2.
    """
    _check_bound(s, bound)
    n = s.period
    support = sorted(s.support)
    prec = _spectral_prec(n)
    with mpmath.workprec(prec):
        roots = [mpmath.expjpi(mpmath.mpf(2 * k) / n) for k in range(n)]
        values = []
        for j in range(n):
            acc = mpmath.mpc(0)
            for i in support:
                acc += roots[i * j % n]
            values.append(acc)
        prod = mpmath.mpc(1)
        for v in values:
            prod *= v
        unit = mpmath.ldexp(1, 3 - prec)
        w = len(support)
        eps = (w + 1) ** 2 * unit
        mags = [abs(v) for v in values]
        upper = mpmath.fprod(a + eps for a in mags)
        exact_mag = mpmath.fprod(mags)
        err = (upper - exact_mag) + exact_mag * ((1 + unit) ** (2 * n) - 1)
        rounded = int(mpmath.nint(prod.real))
        gap = abs(prod - rounded)
        bound_total = float(2 * err + gap)
    if bound_total >= 0.5:
        raise SpectralPrecisionError(
            f"spectral determinant for N={n} not resolved: error bound {bound_total}"
        )
    return rounded, bound_total


def det_closed_form_ideal(n: int) -> int:
    """``|det(A)|`` for an ``(N, (N+1)/2, (N+1)/4)`` difference-set sequence."""
    if n % 4 != 3:
        raise ValueError(f"N={n} is not 3 mod 4")
    return (n + 1) // 2 * ((n + 1) // 4) ** ((n - 1) // 2)


def det_closed_form_legendre(p: int) -> int:
    """``|det(A)|`` for the Legendre sequence of a prime ``p = 1 mod 4``."""
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    return (p - 1) // 2 * ((p - 1) // 4) ** ((p - 1) // 2)


def gram_det(x: int, y: int, n: int) -> int:
    """Determinant of the n-by-n matrix with ``x`` on the diagonal and ``y`` elsewhere."""
    if n < 1:
        raise ValueError("n must be positive")
    return (x + (n - 1) * y) * (x - y) ** (n - 1)


@dataclass(frozen=True)
class CirculantReport:
    det_exact: int
    det_spectral: int
    spectral_error: float
    det_closed_form: int | None
    agree: bool


def circulant_report(
    s: BinarySequence, closed_form: int | None = None, bound: int = DET_BOUND
) -> CirculantReport:
    exact = circulant_det_exact(s, bound)
    spectral, err = circulant_det_spectral(s, bound)
    agree = spectral == exact and (closed_form is None or closed_form == abs(exact))
    return CirculantReport(exact, spectral, err, closed_form, agree)


def poly_mul(a, b) -> list[int]:
    """Integer polynomial product, coefficients lowest degree first."""
    if not len(a) or not len(b):
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(c) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class BezoutWitness:
    u_coeffs: tuple[int, ...]
    v_coeffs: tuple[int, ...]
    det_value: int

    def replay(self, s: BinarySequence) -> list[int]:
        """``u(x) P_s(x) + v(x) (1 - x^N)`` as a trimmed coefficient list."""
        n = s.period
        lhs = poly_mul(self.u_coeffs, s.bits)
        one_minus = [1] + [0] * (n - 1) + [-1]
        rhs = poly_mul(self.v_coeffs, one_minus)
        size = max(len(lhs), len(rhs))
        total = [0] * size
        for i, c in enumerate(lhs):
            total[i] += c
        for i, c in enumerate(rhs):
            total[i] += c
        return _trim(total)

    def at(self, x: int) -> tuple[int, int]:
        """``(u(x), v(x))``."""
        return (
            sum(c * x**i for i, c in enumerate(self.u_coeffs)),
            sum(c * x**i for i, c in enumerate(self.v_coeffs)),
        )


def bezout_system(s: BinarySequence) -> np.ndarray:
    """The ``(2N-1)``-square coefficient matrix of the Bezout linear system.

    Unknowns are ``(u_0..u_{N-1}, v_0..v_{N-2})``. Row ``k < N`` matches the
    coefficient of ``x^k``; row ``N + k`` matches ``x^{N+k}``.
    """
    n = s.period
    bits = s.bits
    c = np.zeros((2 * n - 1, 2 * n - 1), dtype=object)
    for k in range(n):
        for i in range(k + 1):
            c[k, i] = bits[k - i]
        if k < n - 1:
            c[k, n + k] = 1
    for k in range(n - 1):
        for i in range(k + 1, n):
            c[n + k, i] = bits[n + k - i]
        c[n + k, n + k] = -1
    return c


def bezout_witness(s: BinarySequence, bound: int = DET_BOUND) -> BezoutWitness:
    """Integer ``u, v`` with ``u P_s + v (1 - x^N) = det(A)``.

    Adding the lower ``N-1`` equations onto the upper ones turns the system
    block-triangular with the circulant ``A`` in the corner, so ``u`` solves
    ``A u = det(A) e_0`` and ``v`` follows by substitution. The rational
    solution is required to be integral, and the full system is re-checked.
    """
    _check_bound(s, bound)
    n = s.period
    det = circulant_det_exact(s, bound)
    if det == 0:
        raise SingularCirculant("circulant determinant is zero")
    rhs = np.zeros((n, 1), dtype=object)
    rhs[0, 0] = det
    aug = np.concatenate([circulant_matrix(s).astype(object), rhs], axis=1)
    reduced, _, _ = _eliminate(aug, n)
    u: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(reduced[i, n])
        for j in range(i + 1, n):
            acc -= reduced[i, j] * u[j]
        u[i] = acc / reduced[i, i]
    if any(x.denominator != 1 for x in u):
        raise ArithmeticError("Bezout solution is not integral")
    u_int = [int(x) for x in u]
    v_int = [
        sum(s.bits[n + k - i] * u_int[i] for i in range(k + 1, n)) for k in range(n - 1)
    ]
    alpha = np.array(u_int + v_int, dtype=object)
    beta = np.zeros(2 * n - 1, dtype=object)
    beta[0] = det
    if not np.array_equal(bezout_system(s).dot(alpha), beta):
        raise ArithmeticError("Bezout solution does not satisfy the coefficient system")
    return BezoutWitness(tuple(u_int), tuple(v_int), det)
