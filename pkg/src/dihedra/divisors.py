"""Divisor lattice utilities: k-divisors, Euler phi, and the divisor
transform with its inclusion-exclusion inverse.

An integer function is a finitely supported map from positive integers to
integers, stored as a table over the divisors of a fixed modulus and 0
elsewhere.  The divisor transform of psi at n sums psi over the divisors of
n; the inverse transform recovers psi from its divisor transform by
alternating sums over k-divisors (equivalently, by Moebius inversion over
squarefree quotients).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidArgumentError


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n in increasing order."""
    _check_positive(n)
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n in increasing order."""
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def is_squarefree(n: int) -> bool:
    _check_positive(n)
    prod = 1
    for p in prime_factors(n):
        prod *= p
    return prod == n


def k_divisors(n: int, k: int) -> frozenset[int]:
    """Divisors q of n such that n/q is a product of exactly k distinct
    primes (each appearing once).  k = 0 gives {n}."""
    _check_positive(n)
    if not isinstance(k, int) or k < 0:
        raise InvalidArgumentError(f"k must be a nonnegative integer, got {k!r}")
    out = []
    for q in divisors(n):
        m = n // q
        if is_squarefree(m) and len(prime_factors(m)) == k:
            out.append(q)
    return frozenset(out)


@lru_cache(maxsize=None)
def signed_squarefree_quotients(n: int) -> tuple[tuple[int, int], ...]:
    """Pairs (sign, q) with q a k-divisor of n and sign = (-1)^k, over all k."""
    _check_positive(n)
    out = []
    for q in divisors(n):
        m = n // q
        if is_squarefree(m):
            out.append((1 if len(prime_factors(m)) % 2 == 0 else -1, q))
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n."""
    _check_positive(n)
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    _check_positive(n)
    if not is_squarefree(n):
        return 0
    return 1 if len(prime_factors(n)) % 2 == 0 else -1


@dataclass(frozen=True)
class IntegerFunction:
    """Finitely supported integer function given by a table over the
    divisors of ``modulus``; evaluates to 0 off-support."""

    modulus: int
    table: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        _check_positive(self.modulus, "modulus")
        divs = set(divisors(self.modulus))
        for q, value in self.table.items():
            if q not in divs:
                raise InvalidArgumentError(
                    f"table key {q} is not a divisor of modulus {self.modulus}"
                )
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidArgumentError(f"table value for {q} must be int")

    def __call__(self, q: int) -> int:
        _check_positive(q, "q")
        return self.table.get(q, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(q for q in divisors(self.modulus) if self.table.get(q, 0) != 0)


def divisor_transform(psi, n: int) -> int:
    """Sum of psi over the divisors of n; psi is any integer function on
    positive integers (an IntegerFunction or plain callable)."""
    _check_positive(n)
    return sum(psi(q) for q in divisors(n))


def inverse_divisor_transform(phi, n: int) -> int:
    """Alternating k-divisor sum sum_k (-1)^k sum_{q in Z_k(n)} phi(q).

    Inverts divisor_transform: if phi = divisor_transform of psi on every
    divisor of n, this returns psi(n).  Numerically equal to the Moebius sum
    over squarefree quotients of n.
    """
    _check_positive(n)
    return sum(sign * phi(q) for sign, q in signed_squarefree_quotients(n))
