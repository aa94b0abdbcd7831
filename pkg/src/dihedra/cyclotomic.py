"""Exact arithmetic in the cyclotomic integers Z[zeta_n].

Elements are integer coefficient vectors over the power basis
1, zeta, ..., zeta^(n-1) taken modulo zeta^n = 1; rationality questions are
settled by reducing modulo the n-th cyclotomic polynomial, so no floating
point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .divisors import divisors, _check_positive
from .errors import InvalidArgumentError


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; exact division over Z
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    _check_positive(n)
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the cyclotomic polynomials of the proper divisors
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicInteger:
    """Element of Z[zeta_n] as coefficients of zeta^0 .. zeta^(n-1)."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_positive(self.n)
        if len(self.coeffs) != self.n:
            raise InvalidArgumentError("coefficient vector must have length n")

    @classmethod
    def zero(cls, n: int) -> "CyclotomicInteger":
        return cls(n, (0,) * n)

    @classmethod
    def from_int(cls, n: int, value: int) -> "CyclotomicInteger":
        return cls(n, (value,) + (0,) * (n - 1))

    @classmethod
    def root(cls, n: int, exponent: int, coeff: int = 1) -> "CyclotomicInteger":
        """coeff * zeta_n^exponent."""
        vec = [0] * n
        vec[exponent % n] += coeff
        return cls(n, tuple(vec))

    def _binop(self, other: "CyclotomicInteger") -> None:
        if self.n != other.n:
            raise InvalidArgumentError("mixed cyclotomic orders")

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._binop(other)
        return CyclotomicInteger(
            self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._binop(other)
        return CyclotomicInteger(
            self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._binop(other)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return CyclotomicInteger(n, tuple(out))

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugation, zeta -> zeta^(-1)."""
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            out[(-i) % n] += a
        return CyclotomicInteger(n, tuple(out))

    def reduced(self) -> tuple[int, ...]:
        """Remainder modulo the n-th cyclotomic polynomial (degree < phi(n))."""
        _, rem = _poly_divmod(list(self.coeffs), list(cyclotomic_polynomial(self.n)))
        return tuple(rem)

    def as_integer(self) -> int:
        """The rational integer this element equals, or raise."""
        rem = self.reduced()
        if len(rem) > 1:
            raise InvalidArgumentError(f"{self} is not a rational integer")
        return rem[0] if rem else 0

    def is_zero(self) -> bool:
        return not self.reduced()
