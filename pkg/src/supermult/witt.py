"""Witt-type counting for free Lie algebras and free Lie superalgebras.

Positions in a multidegree follow the canonical generator order: the ``m``
even generators first, then the ``n`` odd ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterator, NamedTuple, Sequence

from .exactlin import PreconditionError


class SuperDim(NamedTuple):
    """Superdimension (even | odd)."""

    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other):  # componentwise, unlike tuple concatenation
        return SuperDim(self.even + other[0], self.odd + other[1])

    def __sub__(self, other):
        return SuperDim(self.even - other[0], self.odd - other[1])

    def __str__(self):
        return f"({self.even}|{self.odd})"


@dataclass(frozen=True)
class ParitySignature:
    even_count: int
    odd_count: int

    def __post_init__(self):
        if self.even_count < 0 or self.odd_count < 0:
            raise PreconditionError("generator counts must be non-negative")

    @property
    def size(self) -> int:
        return self.even_count + self.odd_count

    def parity_of(self, alpha: Sequence[int]) -> int:
        """Parity of any monomial of multidegree ``alpha``."""
        return sum(alpha[self.even_count:]) % 2


def moebius(k: int) -> int:
    if k < 1:
        raise PreconditionError("moebius is defined for k >= 1")
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


def divisors(k: int) -> list[int]:
    small = [d for d in range(1, int(k**0.5) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def _check_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise PreconditionError("multidegree entries must be non-negative")
    if sum(alpha) < 1:
        raise PreconditionError("multidegree must have total degree >= 1")
    return alpha


def _multinomial(alpha: Sequence[int]) -> int:
    out = factorial(sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


@lru_cache(maxsize=None)
def _witt(alpha: tuple[int, ...]) -> int:
    total = sum(alpha)
    g = 0
    for a in alpha:
        g = gcd(g, a)
    acc = 0
    for e in divisors(g):
        mu = moebius(e)
        if mu:
            acc += mu * _multinomial([a // e for a in alpha])
    if acc % total:
        raise ArithmeticError(f"Witt sum for {alpha} is not divisible by {total}")
    return acc // total


def witt_W(alpha: Sequence[int]) -> int:
    """Rank of the multidegree-``alpha`` component of the free Lie algebra."""
    return _witt(_check_alpha(alpha))


def super_beta(sig: ParitySignature, alpha: Sequence[int]) -> int:
    """1 when ``alpha/2`` is integral and has odd parity, so squares (v)(v) exist."""
    if any(a % 2 for a in alpha):
        return 0
    return (sum(alpha[sig.even_count:]) // 2) % 2


def super_witt_SW(sig: ParitySignature, alpha: Sequence[int]) -> int:
    """Rank of the multidegree-``alpha`` component of the free Lie superalgebra."""
    alpha = _check_alpha(alpha)
    if len(alpha) != sig.size:
        raise PreconditionError(f"multidegree has length {len(alpha)}, expected {sig.size}")
    value = _witt(alpha)
    if super_beta(sig, alpha):
        value += _witt(tuple(a // 2 for a in alpha))
    return value


def dim_L_alpha(sig: ParitySignature, alpha: Sequence[int]) -> int:
    """Signed-multinomial closed form for the multidegree component (independent of SW)."""
    alpha = _check_alpha(alpha)
    total = sum(alpha)
    odd_deg = sum(alpha[sig.even_count:])
    g = 0
    for a in alpha:
        g = gcd(g, a)
    acc = 0
    for e in divisors(g):
        mu = moebius(e)
        if mu:
            sign = -1 if (odd_deg // e) % 2 else 1
            acc += mu * sign * _multinomial([a // e for a in alpha])
    if odd_deg % 2:
        acc = -acc
    if acc % total:
        raise ArithmeticError(f"signed Witt sum for {alpha} is not divisible by {total}")
    return acc // total


@dataclass(frozen=True)
class GradedDims:
    dim_Lr: int
    dim_Lr_plus: int
    dim_Lr_minus: int
    sdim_Lr: int


def graded_dims(sig: ParitySignature, r: int) -> GradedDims:
    """Dimensions of the degree-``r`` component of the free Lie superalgebra, split by parity."""
    if r < 1:
        raise PreconditionError("degree must be >= 1")
    m, n = sig.even_count, sig.odd_count
    tot = plus = sdim = Fraction(0)
    for a in divisors(r):
        mu = moebius(a)
        if not mu:
            continue
        big = (m - (-1) ** a * n) ** (r // a)
        small = (m - n) ** (r // a)
        tot += mu * big
        plus += mu * Fraction(big + small, 2)
        sdim += mu * small
    tot, plus, sdim = tot / r, plus / r, sdim / r
    minus = tot - plus
    for value in (tot, plus, sdim, minus):
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral graded dimension at r={r}: {value}")
    return GradedDims(int(tot), int(plus), int(minus), int(sdim))


def multidegrees(size: int, total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` into ``size`` non-negative parts (lexicographic)."""
    if size == 0:
        return
    for cut in itertools.combinations(range(total + size - 1), size - 1):
        prev = -1
        parts = []
        for c in cut:
            parts.append(c - prev - 1)
            prev = c
        parts.append(total + size - 1 - prev - 1)
        yield tuple(parts)


def layer_dim(sig: ParitySignature, n: int) -> SuperDim:
    """Superdimension of F^n/F^{n+1} for the free Lie superalgebra of signature ``sig``."""
    if n < 1:
        raise PreconditionError("layer index must be >= 1")
    even = odd = 0
    for alpha in multidegrees(sig.size, n):
        count = super_witt_SW(sig, alpha)
        if sig.parity_of(alpha):
            odd += count
        else:
            even += count
    return SuperDim(even, odd)
