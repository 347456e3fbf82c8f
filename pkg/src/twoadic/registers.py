"""Bit-exact Fibonacci-mode FCSR and LFSR simulators.

Both machines hold their register as ``(a_{r-1}, ..., a_0)``; the rightmost
entry ``a_0`` is the next output. The feedback sum pairs tap ``q_i`` with
``a_{r-i}``, which is the unique ordering for which an LFSR with connection
polynomial ``f`` outputs ``g/f`` and an FCSR with connection number ``q``
outputs the 2-adic integer ``p/q``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .numtheory import is_prime

__all__ = [
    "FcsrState",
    "LfsrState",
    "fcsr_generate",
    "fcsr_init_from_fraction",
    "lfsr_generate",
]


@dataclass(frozen=True)
class FcsrState:
    q: int
    register: tuple[int, ...]
    memory: int = 0

    def __post_init__(self):
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError(f"connection number must be odd and >= 3, got {self.q}")
        if len(self.register) != self.stages:
            raise ValueError(f"q={self.q} needs {self.stages} stages, got {len(self.register)}")
        if any(a not in (0, 1) for a in self.register):
            raise ValueError("register entries must be bits")

    @property
    def stages(self) -> int:
        return (self.q + 1).bit_length() - 1

    @property
    def taps(self) -> tuple[int, ...]:
        """``(q_1, ..., q_r)``: bits 1..r of ``q + 1``."""
        q1 = self.q + 1
        return tuple((q1 >> i) & 1 for i in range(1, self.stages + 1))


def fcsr_generate(state: FcsrState, n: int) -> tuple[list[int], FcsrState]:
    """Clock the FCSR ``n`` times; return the output bits and the final state."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    taps = state.taps
    reg = list(state.register)
    m = state.memory
    out = []
    for _ in range(n):
        sigma = m
        for i, qi in enumerate(taps):
            if qi:
                sigma += reg[i]
        out.append(reg.pop())
        bit = sigma & 1
        reg.insert(0, bit)
        m = (sigma - bit) >> 1
    return out, replace(state, register=tuple(reg), memory=m)


def fcsr_init_from_fraction(num: int, den: int) -> FcsrState:
    """FCSR with connection number ``den`` whose output is ``num/den`` 2-adically.

    The register is loaded with the first ``r`` bits of the expansion and the
    memory is solved from the FCSR's numerator identity; the result is then
    replayed against long division before being returned.
    """
    if den < 3 or den % 2 == 0:
        raise ValueError(f"denominator must be odd and >= 3, got {den}")
    if not -den <= num <= 0:
        raise ValueError(f"numerator {num} outside [-{den}, 0]")
    r = (den + 1).bit_length() - 1
    inv = pow(den, -1, 1 << r)
    x = num * inv % (1 << r)
    bits = [(x >> i) & 1 for i in range(r)]
    coeffs = [-1] + [((den + 1) >> i) & 1 for i in range(1, r + 1)]
    acc = 0
    for k in range(r):
        acc += sum(coeffs[i] * bits[k - i] for i in range(k + 1)) << k
    memory, rem = divmod(acc - num, 1 << r)
    if rem:
        raise ArithmeticError("memory solve left a remainder")
    state = FcsrState(den, tuple(reversed(bits)), memory)

    check = 2 * r + 16
    got, _ = fcsr_generate(state, check)
    want = num * pow(den, -1, 1 << check) % (1 << check)
    if sum(b << i for i, b in enumerate(got)) != want:
        raise ArithmeticError(f"FCSR replay diverged from {num}/{den}")
    return state


@dataclass(frozen=True)
class LfsrState:
    p: int
    coeffs: tuple[int, ...]
    register: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"field modulus {self.p} is not prime")
        if not self.coeffs or self.coeffs[-1] % self.p == 0:
            raise ValueError("last connection coefficient must be nonzero")
        if len(self.register) != len(self.coeffs):
            raise ValueError("register length must match the number of taps")
        if any(not 0 <= a < self.p for a in (*self.coeffs, *self.register)):
            raise ValueError("entries must be reduced mod p")

    @classmethod
    def from_taps(cls, p: int, coeffs: Sequence[int], register: Sequence[int]) -> "LfsrState":
        return cls(p, tuple(c % p for c in coeffs), tuple(a % p for a in register))

    @property
    def stages(self) -> int:
        return len(self.coeffs)


def lfsr_generate(state: LfsrState, n: int) -> tuple[list[int], LfsrState]:
    """Clock the LFSR ``n`` times; return the emitted symbols and the final state."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = state.p
    active = [(i, c) for i, c in enumerate(state.coeffs) if c]
    reg = list(state.register)
    out = []
    if p == 2:
        idx = [i for i, _ in active]
        for _ in range(n):
            sigma = 0
            for i in idx:
                sigma ^= reg[i]
            out.append(reg.pop())
            reg.insert(0, sigma)
    else:
        for _ in range(n):
            sigma = sum(c * reg[i] for i, c in active) % p
            out.append(reg.pop())
            reg.insert(0, sigma)
    return out, replace(state, register=tuple(reg))
