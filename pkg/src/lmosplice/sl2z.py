"""2x2 matrices and factorization of SL2(Z) into the generators (a, -1; 1, 0)."""
from __future__ import annotations

from functools import reduce
from typing import Iterable, NamedTuple, Sequence

from .dedekind import ValidationError


class Mat2(NamedTuple):
    """A 2x2 matrix ``(a b; c d)``; entries may be ints or Fractions."""

    a: object
    b: object
    c: object
    d: object

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse_sl2(self) -> "Mat2":
        """Inverse of a determinant-one matrix."""
        if self.det() != 1:
            raise ValidationError("matrix is not unimodular")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


IDENTITY = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
S_INV = Mat2(0, 1, -1, 0)


def generator(a: int) -> Mat2:
    return Mat2(a, -1, 1, 0)


def recompose(seq: Iterable[int]) -> Mat2:
    """Left-to-right product ``generator(a_1) ... generator(a_n)``."""
    return reduce(lambda m, a: m @ generator(a), seq, IDENTITY)


def _check_unimodular(m: Mat2) -> Mat2:
    m = Mat2(*m)
    if any(not isinstance(x, int) for x in m):
        raise ValidationError("entries must be integers")
    if m.det() != 1:
        raise ValidationError(f"det{m} = {m.det()} != 1")
    return m


def decompose(m: Mat2) -> list[int]:
    """Return ``a_1..a_n`` with ``recompose([a_1..a_n]) == m``.

    Euclidean reduction of the first column using ``generator(a) = T^a S``;
    the residual ``+-T^b`` is finished with ``S^2 = -I`` and ``S^4 = I``
    (nothing is appended when it is the identity).
    """
    m = _check_unimodular(m)
    seq: list[int] = []
    while m.c != 0:
        # nearest-integer quotient: |remainder| <= |c|/2, so O(log |c|) steps
        a = m.a // m.c
        if abs(m.a - (a + 1) * m.c) < abs(m.a - a * m.c):
            a += 1
        m = S_INV @ Mat2(1, -a, 0, 1) @ m
        seq.append(a)
    b = m.b * m.a  # m = m.a * T^(m.a * m.b), m.a = +-1
    if m.a == 1 and b == 0:
        # nothing left, but keep the sequence nonempty
        return seq or [0, 0, 0, 0]
    if m.a == -1 and b == 0:
        return seq + [0, 0]
    # T^b = generator(b) S^-1 and S^-1 = S^3, -S^-1 = S
    return seq + ([b, 0, 0, 0] if m.a == 1 else [b, 0])


def splice_factorization(g: Mat2) -> list[int]:
    """Integers ``a_1..a_n`` with ``g = S generator(a_n) ... generator(a_1)``."""
    g = _check_unimodular(g)
    return list(reversed(decompose(S_INV @ g)))


def splice_recompose(seq: Sequence[int]) -> Mat2:
    return S @ recompose(reversed(seq))
