from fractions import Fraction as F
import itertools

import pytest
from hypothesis import given, strategies as st

from lmosplice.sl2z import Mat2
from lmosplice.tridiag import (
    SingularMatrix,
    Tridiagonal,
    associated_mat2,
    dense_inverse,
    inverse_corners,
    kirby_melvin,
    signature_oracle,
    signature_recursive,
    signature_recursive_left,
)


@pytest.mark.parametrize("c, want", [([0], (-1, 0, 0, -1)), ([1], (-1, 0, 1, -1)), ([2, 2], (-2, 1, 3, -2))])
def test_associated_matrix(c, want):
    assert associated_mat2(c) == Mat2(*want)


@pytest.mark.parametrize("c, want", [([0], 0), ([1], 1), ([-3], -1), ([2, 2], 2), ([0, 0], 0), ([1, 1], 1)])
def test_signature_values(c, want):
    assert signature_recursive(c) == want
    assert signature_recursive_left(c) == want
    assert signature_oracle(c) == want


def test_tridiagonal_basics():
    t = Tridiagonal([1, F(1, 2), -3])
    assert t.trace() == F(-3, 2)
    assert t.dense() == [[1, 1, 0], [1, F(1, 2), 1], [0, 1, -3]]
    with pytest.raises(ValueError):
        Tridiagonal([])


def test_exhaustive_small_signatures():
    values = [F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2)]
    for n in range(1, 5):
        for c in itertools.product(values, repeat=n):
            assert signature_recursive(c) == signature_oracle(c) == signature_recursive_left(c), c


entries = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@given(st.lists(entries, min_size=1, max_size=9))
def test_signature_property(c):
    assert signature_recursive(c) == signature_oracle(c) == signature_recursive_left(c)


@pytest.mark.parametrize("c, want", [([2, 2], (F(2, 3), F(-1, 3), F(2, 3))), ([1], (1, 1, 1))])
def test_corner_values(c, want):
    assert tuple(inverse_corners(c)) == want


def test_singular_corners():
    with pytest.raises(SingularMatrix):
        inverse_corners([0])
    with pytest.raises(SingularMatrix):
        inverse_corners([1, 1])


@given(st.lists(entries, min_size=1, max_size=7))
def test_corners_property(c):
    t = Tridiagonal(c)
    gamma = associated_mat2(t).c
    if gamma == 0:
        with pytest.raises(SingularMatrix):
            dense_inverse(t.dense())
        return
    inv = dense_inverse(t.dense())
    tl, off, br = inverse_corners(t)
    assert (tl, off, br) == (inv[0][0], inv[0][-1], inv[-1][-1])
    assert inv[-1][0] == off


@pytest.mark.parametrize("c, want", [([0], (0, 0)), ([1], (2, 2)), ([2, 2], (2, 2))])
def test_kirby_melvin_values(c, want):
    assert tuple(kirby_melvin(c)) == want


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=8))
def test_kirby_melvin_property(c):
    lhs, rhs = kirby_melvin(c)
    assert lhs == rhs


def test_kirby_melvin_needs_integers():
    with pytest.raises(ValueError):
        kirby_melvin([F(1, 2)])
