"""Symmetric tridiagonal matrices with unit off-diagonal.

``Tridiagonal([c_1, ..., c_l])`` stands for the l x l matrix with diagonal
``c_i`` and ones directly above and below it.  Its associated 2x2 matrix is
``S (c_1, -1; 1, 0) ... (c_l, -1; 1, 0)`` with ``S = (0, -1; 1, 0)``; the
signature, the invertibility and the four corners of the inverse can all be
read from it.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .dedekind import dedekind_symbol, sgn
from .sl2z import S, Mat2, generator


class SingularMatrix(ArithmeticError):
    pass


class Tridiagonal(tuple):
    """Immutable nonempty sequence of exact diagonal entries."""

    def __new__(cls, diagonal: Sequence) -> "Tridiagonal":
        entries = tuple(Fraction(c) for c in diagonal)
        if not entries:
            raise ValueError("a tridiagonal matrix needs at least one entry")
        return super().__new__(cls, entries)

    def trace(self) -> Fraction:
        return sum(self, Fraction(0))

    def dense(self) -> list[list[Fraction]]:
        n = len(self)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, c in enumerate(self):
            rows[i][i] = c
            if i + 1 < n:
                rows[i][i + 1] = rows[i + 1][i] = Fraction(1)
        return rows

    def __repr__(self) -> str:
        return "Tridiagonal([" + ", ".join(str(c) for c in self) + "])"


def _exact(c):
    """Integral entries stay ints (much faster products); others become Fractions."""
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def associated_mat2(t: Sequence) -> Mat2:
    m = S
    for c in t:
        m = m @ generator(_exact(c))
    return m


def signature_recursive(t: Sequence) -> int:
    """Signature by peeling the last entry: each step subtracts sgn(gamma) sgn(delta)."""
    m = S
    sig = 0
    for c in t:
        m = m @ generator(_exact(c))
        sig -= sgn(m.c) * sgn(m.d)
    return sig


def signature_recursive_left(t: Sequence) -> int:
    """Same signature, peeling the first entry: subtract sgn(gamma) sgn(alpha)."""
    sig = 0
    # A(c_i..c_l) = S G(c_i) S^-1 A(c_{i+1}..c_l), starting from A() = S
    m = S
    s_inv = Mat2(0, 1, -1, 0)
    for c in reversed(t):
        m = S @ generator(_exact(c)) @ s_inv @ m
        sig -= sgn(m.c) * sgn(m.a)
    return sig


def _schur_signature(rows: list[list[Fraction]]) -> int:
    """Signature of a symmetric matrix by exact congruence elimination."""
    a = [row[:] for row in rows]
    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            sig += sgn(d)
            rest = [i for i in range(n) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break  # zero form
        i, j = pair
        b = a[i][j]
        # hyperbolic block [[0, b], [b, 0]] has signature 0; inverse is [[0, 1/b], [1/b, 0]]
        rest = [k for k in range(n) if k not in pair]
        a = [[a[k][l] - (a[k][i] * a[j][l] + a[k][j] * a[i][l]) / b for l in rest] for k in rest]
    return sig


def signature_oracle(t: Sequence) -> int:
    return _schur_signature(Tridiagonal(t).dense())


class Corners(NamedTuple):
    top_left: Fraction
    off_corner: Fraction
    bottom_right: Fraction


def inverse_corners(t: Sequence) -> Corners:
    alpha, _, gamma, delta = associated_mat2(t)
    if gamma == 0:
        raise SingularMatrix(f"{Tridiagonal(t)!r} is singular")
    sign = 1 if len(t) % 2 else -1  # (-1)^(l+1)
    return Corners(-Fraction(alpha) / gamma, Fraction(sign) / gamma, -Fraction(delta) / gamma)


def dense_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises SingularMatrix."""
    n = len(rows)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class KirbyMelvin(NamedTuple):
    lhs: Fraction
    rhs: Fraction


def kirby_melvin(t: Sequence) -> KirbyMelvin:
    """Both sides of ``3 sig - tr = S(alpha/gamma) - (alpha + delta)/gamma``.

    When gamma = 0 the right side is ``-beta/alpha``.  Entries must be integers.
    """
    t = Tridiagonal(t)
    if any(c.denominator != 1 for c in t):
        raise ValueError("Kirby-Melvin identity needs integer entries")
    alpha, beta, gamma, delta = associated_mat2(t)
    lhs = 3 * signature_recursive(t) - t.trace()
    if gamma != 0:
        a, g = int(alpha), int(gamma)
        assert gcd(a, g) == 1, "associated matrix is not unimodular"
        rhs = dedekind_symbol(a, g) - Fraction(alpha + delta, gamma)
    else:
        rhs = Fraction(-beta, alpha)
    return KirbyMelvin(lhs, rhs)
