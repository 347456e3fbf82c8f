"""Binary periodic sequences, their autocorrelation, and the generator families.

A sequence is stored as one period of bits. All correlation counts are exact:
the periodic cross-count ``|D ∩ (D + tau)|`` for every shift is read off one
big-integer product, so no floating point is involved even at period 2**16.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable

import numpy as np

from .gauss import canonical_primitive_root, cyclotomic_table, legendre_symbol
from .numtheory import factorize, is_prime
from .registers import LfsrState, lfsr_generate

__all__ = [
    "BinarySequence",
    "AutocorrelationProfile",
    "DifferenceSetCertificate",
    "ConstructionError",
    "sequence_polynomial_eval",
    "complement",
    "shift_counts",
    "autocorrelation_profile",
    "support_difference_set_check",
    "gen_legendre",
    "gen_dhl",
    "gen_twin_prime",
    "gen_hall_sextic",
    "gen_m_sequence",
    "primitive_polynomial",
    "parse_sequence",
    "format_sequence",
    "read_sequence",
    "write_sequence",
]

CLASSIFICATIONS = ("ideal", "optimal_1mod4", "optimal_2mod4", "optimal_0mod4", "none")


class ConstructionError(RuntimeError):
    """A generator produced a sequence that failed its own validation."""


@dataclass(frozen=True)
class BinarySequence:
    """One period ``(s_0, ..., s_{N-1})`` of a binary sequence."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("period must be at least 1")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        return cls(tuple(int(c) for c in text.strip()))

    @classmethod
    def from_support(cls, support: Iterable[int], period: int) -> "BinarySequence":
        bits = [0] * period
        for i in support:
            bits[i % period] = 1
        return cls(tuple(bits))

    @property
    def period(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bits) if b)

    def as_array(self) -> np.ndarray:
        arr = np.array(self.bits, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def to_int(self) -> int:
        """``P_s(2)``, i.e. the bits read little-endian."""
        return int("".join(map(str, reversed(self.bits))), 2)

    def shifted(self, k: int) -> "BinarySequence":
        """The sequence ``t_i = s_{i+k}``."""
        k %= self.period
        return BinarySequence(self.bits[k:] + self.bits[:k])

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def sequence_polynomial_eval(s: BinarySequence, x: int) -> int:
    """``P_s(x) = sum(s_i * x**i)`` over the integers."""
    if x == 2:
        return s.to_int()
    acc = 0
    for b in reversed(s.bits):
        acc = acc * x + b
    return acc


def complement(s: BinarySequence) -> BinarySequence:
    return BinarySequence(tuple(1 - b for b in s.bits))


def shift_counts(s: BinarySequence) -> np.ndarray:
    """``c[tau] = |D_s ∩ (D_s + tau)|`` for ``tau = 0..N-1``, exactly.

    Packs the bits into base-256**k digits, multiplies by the reversed packing
    and folds the linear correlation cyclically.
    """
    n = s.period
    width = (n.bit_length() + 7) // 8 + 1
    digits = np.zeros(n * width, dtype=np.uint8)
    digits[::width] = s.bits
    fwd = int.from_bytes(digits.tobytes(), "little")
    rev = int.from_bytes(digits.reshape(n, width)[::-1].tobytes(), "little")
    prod = fwd * rev
    raw = np.frombuffer(prod.to_bytes((2 * n) * width, "little"), dtype=np.uint8)
    raw = raw.reshape(2 * n, width).astype(np.int64)
    lin = np.zeros(2 * n, dtype=np.int64)
    for k in range(width):
        lin += raw[:, k] << (8 * k)
    # lin[n - 1 + d] counts pairs (i, j) with i - j = d; shift tau pairs d = -tau, n - tau
    tau = np.arange(n)
    counts = lin[n - 1 - tau] + np.where(tau > 0, lin[2 * n - 1 - tau], 0)
    return counts


@dataclass(frozen=True)
class AutocorrelationProfile:
    values: tuple[int, ...]
    classification: str

    @property
    def out_of_phase(self) -> frozenset[int]:
        return frozenset(self.values[1:])


def _classify(n: int, values: np.ndarray, weight: int) -> str:
    if weight in (0, n) or n == 1:
        return "none"
    off = set(values[1:].tolist())
    if n % 4 == 3 and off == {-1}:
        return "ideal"
    allowed = {1: {1, -3}, 2: {2, -2}, 0: {0, -4}}.get(n % 4)
    if allowed is not None and off <= allowed:
        return {1: "optimal_1mod4", 2: "optimal_2mod4", 0: "optimal_0mod4"}[n % 4]
    return "none"


def autocorrelation_profile(s: BinarySequence) -> AutocorrelationProfile:
    """Periodic autocorrelation ``C_s(tau)`` and its optimality class."""
    n, w = s.period, s.weight
    values = n - 4 * w + 4 * shift_counts(s)
    return AutocorrelationProfile(tuple(int(v) for v in values), _classify(n, values, w))


@dataclass(frozen=True)
class DifferenceSetCertificate:
    N: int
    k: int
    lam: int | None
    holds: bool


def support_difference_set_check(s: BinarySequence) -> DifferenceSetCertificate:
    """Exhaustively test whether the support is a cyclic difference set."""
    counts = shift_counts(s)
    k = s.weight
    off = set(counts[1:].tolist())
    if not off:
        return DifferenceSetCertificate(s.period, k, 0, True)
    if len(off) == 1:
        return DifferenceSetCertificate(s.period, k, off.pop(), True)
    return DifferenceSetCertificate(s.period, k, None, False)


def _odd_prime(p: int, what: str) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{what}: {p} is not an odd prime")


def gen_legendre(p: int) -> BinarySequence:
    """``s_i = 1`` iff ``i`` is a nonzero square mod ``p``."""
    _odd_prime(p, "legendre")
    squares = {i * i % p for i in range(1, p)}
    return BinarySequence.from_support(squares, p)


def gen_dhl(p: int) -> BinarySequence:
    """Ding-Helleseth-Lam: support ``D_0 ∪ D_1`` of the quartic classes."""
    _odd_prime(p, "dhl")
    if p % 4 != 1:
        raise ValueError(f"dhl: {p} is not 1 mod 4")
    table = cyclotomic_table(p, 4)
    return BinarySequence.from_support(table.cls(0) | table.cls(1), p)


def gen_twin_prime(p: int) -> BinarySequence:
    """Twin-prime sequence of period ``p(p+2)``.

    The support is ``{i : (i|p)(i|p+2) = 1} ∪ {multiples of p+2}``, complemented
    to the ``(N+1)/2`` side and checked to be an ``(N, (N+1)/2, (N+1)/4)``
    difference set.
    """
    q = p + 2
    _odd_prime(p, "twinprime")
    if not is_prime(q):
        raise ValueError(f"twinprime: {q} is not prime")
    n = p * q
    support = {i for i in range(0, n, q)}
    for i in range(n):
        if gcd(i, n) == 1 and legendre_symbol(i, p) * legendre_symbol(i, q) == 1:
            support.add(i)
    s = BinarySequence.from_support(support, n)
    if s.weight == (n - 1) // 2:
        s = complement(s)
    cert = support_difference_set_check(s)
    if not (cert.holds and cert.k == (n + 1) // 2 and cert.lam == (n + 1) // 4):
        raise ConstructionError(f"twin-prime support for p={p} is not a difference set: {cert}")
    return s


def gen_hall_sextic(p: int) -> BinarySequence:
    """Hall's sextic residue sequence for a prime ``p = 4a^2 + 27``.

    Support ``D_0 ∪ D_1 ∪ D_3`` of the order-6 classes. Primitive roots are
    tried in increasing order until the result has ideal autocorrelation.
    """
    if not is_prime(p):
        raise ValueError(f"hall: {p} is not prime")
    a2, rem = divmod(p - 27, 4)
    if p <= 27 or rem or isqrt(a2) ** 2 != a2:
        raise ValueError(f"hall: {p} is not of the form 4a^2 + 27")
    for g in range(2, p):
        try:
            table = cyclotomic_table(p, 6, g)
        except ValueError:
            continue
        s = BinarySequence.from_support(table.cls(0) | table.cls(1) | table.cls(3), p)
        if autocorrelation_profile(s).classification == "ideal":
            return s
    raise ConstructionError(f"hall: no primitive root of {p} gives ideal autocorrelation")


# Primitive polynomials over GF(2), listed by their nonzero exponents.
_PRIMITIVE_TERMS = {
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (4, 1, 0),
    5: (5, 2, 0),
    6: (6, 1, 0),
    7: (7, 1, 0),
    8: (8, 4, 3, 2, 0),
    9: (9, 4, 0),
    10: (10, 3, 0),
    11: (11, 2, 0),
    12: (12, 6, 4, 1, 0),
    13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0),
    15: (15, 1, 0),
    16: (16, 12, 3, 1, 0),
    17: (17, 3, 0),
    18: (18, 7, 0),
    19: (19, 5, 2, 1, 0),
    20: (20, 3, 0),
    21: (21, 2, 0),
    22: (22, 1, 0),
    23: (23, 5, 0),
    24: (24, 7, 2, 1, 0),
}


def _gf2_mulmod(a: int, b: int, f: int, deg: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= f
    return out


def _gf2_powmod(base: int, e: int, f: int, deg: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _gf2_mulmod(result, base, f, deg)
        base = _gf2_mulmod(base, base, f, deg)
        e >>= 1
    return result


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        while a and a.bit_length() >= b.bit_length():
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def _is_primitive_gf2(f: int) -> bool:
    n = f.bit_length() - 1
    if n < 1 or not f & 1:
        return False
    # Rabin irreducibility
    if _gf2_powmod(2, 1 << n, f, n) != 2:
        return False
    for r in factorize(n):
        h = _gf2_powmod(2, 1 << (n // r), f, n) ^ 2
        if _gf2_gcd(f, h) != 1:
            return False
    order = (1 << n) - 1
    return all(_gf2_powmod(2, order // r, f, n) != 1 for r in factorize(order))


def primitive_polynomial(n: int) -> int:
    """A verified primitive polynomial of degree ``n`` over GF(2), as a bitmask."""
    if not 2 <= n <= 24:
        raise ValueError(f"degree {n} outside 2..24")
    f = sum(1 << e for e in _PRIMITIVE_TERMS[n])
    if _is_primitive_gf2(f):
        return f
    for f in range((1 << n) | 1, 1 << (n + 1), 2):
        if _is_primitive_gf2(f):
            return f
    raise ConstructionError(f"no primitive polynomial of degree {n}")


def gen_m_sequence(n: int) -> BinarySequence:
    """One period of the m-sequence from the tabulated degree-``n`` polynomial.

    The LFSR starts from the all-ones register.
    """
    f = primitive_polynomial(n)
    taps = [(f >> i) & 1 for i in range(1, n + 1)]
    bits, _ = lfsr_generate(LfsrState(2, tuple(taps), (1,) * n), (1 << n) - 1)
    s = BinarySequence(tuple(bits))
    if s.weight != 1 << (n - 1):
        raise ConstructionError(f"m-sequence of degree {n} has weight {s.weight}")
    if n <= 16 and autocorrelation_profile(s).classification != "ideal":
        raise ConstructionError(f"m-sequence of degree {n} is not ideal")
    return s


def parse_sequence(text: str) -> BinarySequence:
    """Parse the one-period text format.

    Leading lines starting with ``#`` are comments; exactly one line of
    ``0``/``1`` characters must follow.
    """
    lines = text.splitlines()
    while lines and lines[0].startswith("#"):
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != 1:
        raise ValueError("expected exactly one line of bits after the comments")
    body = lines[0].rstrip("\r")
    if not body or set(body) - {"0", "1"}:
        raise ValueError("sequence line must be a nonempty string of 0/1 characters")
    return BinarySequence.from_string(body)


def format_sequence(s: BinarySequence, comments: Iterable[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return f"{head}{s}\n"


def read_sequence(path) -> BinarySequence:
    with open(path, encoding="ascii") as fh:
        return parse_sequence(fh.read())


def write_sequence(path, s: BinarySequence, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_sequence(s, comments))
