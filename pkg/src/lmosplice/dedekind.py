"""Sawtooth function, Dedekind sums and Dedekind symbols.

All values are exact :class:`fractions.Fraction` instances.  The symbol is
normalized as ``S(p/q) = 12 sgn(q) s(p, q)``, which makes it odd in ``p``,
1-periodic and subject to the reciprocity law

    S(p/q) + S(q/p) = p/q + q/p + 1/(pq) - 3 sgn(pq).
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, gcd
from typing import NamedTuple, Union

Rational = Union[int, Fraction]

HALF = Fraction(1, 2)


class ValidationError(ValueError):
    """Raised on arguments outside an operation's domain."""


def sgn(x: Rational) -> int:
    """Sign with the convention ``sgn(0) = 0``."""
    return (x > 0) - (x < 0)


class CoprimePair(NamedTuple):
    p: int
    q: int

    @classmethod
    def checked(cls, p: int, q: int) -> "CoprimePair":
        if q == 0:
            raise ValidationError("q must be nonzero")
        if gcd(p, q) != 1:
            raise ValidationError(f"({p}, {q}) is not a coprime pair")
        return cls(p, q)

    @classmethod
    def reduced(cls, p: int, q: int) -> "CoprimePair":
        """Divide out ``gcd(p, q)``; this changes the pair, never silently."""
        if q == 0:
            raise ValidationError("q must be nonzero")
        g = gcd(p, q)
        return cls(p // g, q // g)


def sawtooth(x: Rational) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - HALF


def dedekind_sum(p: int, q: int) -> Fraction:
    """Naive ``sum_{k=1}^{|q|-1} ((k/q)) ((kp/q))``.

    For ``0 < k < n = |q|`` both sawtooth values have denominator ``2n`` and
    the two sign flips from a negative ``q`` cancel, so the sum is taken over
    integers and divided once by ``4 n^2``.
    """
    p, q = CoprimePair.checked(p, q)
    n = abs(q)
    total = 0
    for k in range(1, n):
        total += (2 * k - n) * (2 * (k * p % n) - n)
    return Fraction(total, 4 * n * n)


def dedekind_symbol(p: int, q: int) -> Fraction:
    return 12 * sgn(q) * dedekind_sum(p, q)


def dedekind_symbol_fast(p: int, q: int) -> Fraction:
    """Dedekind symbol via periodicity and reciprocity (Euclidean descent).

    Runs in O(log |q|) steps; agrees with :func:`dedekind_symbol`.
    """
    p, q = CoprimePair.checked(p, q)
    acc = Fraction(0)
    sign = 1
    while True:
        if q < 0:
            # S(p/q) = S((-p)/(-q)) as fractions p/q are equal and sgn flips twice
            p, q = -p, -q
        p %= q
        if p == 0 or q == 1:
            return acc
        # reciprocity with q > p > 0
        acc += sign * (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q) - 3)
        sign = -sign
        p, q = q, p


def reciprocity_rhs(p: int, q: int) -> Fraction:
    return Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q) - 3 * sgn(p * q)
