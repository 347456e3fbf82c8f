"""Integer helpers: primality, budgeted factorization, primitive roots."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import gcd, isqrt
import random

__all__ = [
    "FactorizationIncomplete",
    "is_prime",
    "primes_upto",
    "factorize",
    "prime_factors",
    "multiplicative_order",
    "is_primitive_root",
]

TRIAL_LIMIT = 10**6
RHO_SEED = 20130917
RHO_ITERATIONS = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorizationIncomplete(ArithmeticError):
    """Raised when the factoring budget is exhausted.

    ``partial`` holds the prime factors found so far and ``cofactor`` the
    unfactored composite remainder.
    """

    def __init__(self, partial: Counter, cofactor: int):
        super().__init__(f"could not split cofactor {cofactor} within budget")
        self.partial = partial
        self.cofactor = cofactor


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic for n < 3.3e24, which covers every input this package
    proves things about; above that the error probability is negligible.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def primes_upto(n: int) -> tuple[int, ...]:
    """All primes <= n by the sieve of Eratosthenes."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _brent(n: int, rng: random.Random, budget: int) -> int | None:
    # Pollard-Brent; returns a nontrivial factor or None when the budget runs out.
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(
    n: int,
    trial_limit: int = TRIAL_LIMIT,
    rho_iterations: int = RHO_ITERATIONS,
    seed: int = RHO_SEED,
) -> Counter:
    """Prime factorization of ``n >= 1`` as a Counter ``{prime: exponent}``.

    Trial division up to ``trial_limit``, then Pollard-Brent rho with a fixed
    seed. Raises :class:`FactorizationIncomplete` instead of ever returning a
    composite as if it were prime.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    found: Counter = Counter()
    for p in primes_upto(min(trial_limit, isqrt(n) + 1)):
        if p * p > n:
            break
        while n % p == 0:
            found[p] += 1
            n //= p
    if n == 1:
        return found
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] += 1
            continue
        d = _brent(m, rng, rho_iterations)
        if d is None:
            raise FactorizationIncomplete(found, m)
        stack.extend((d, m // d))
    return found


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` in (Z/nZ)^* for prime ``n``."""
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    order = n - 1
    for r in prime_factors(n - 1):
        while order % r == 0 and pow(a, order // r, n) == 1:
            order //= r
    return order


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))
