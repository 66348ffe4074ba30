import pytest
from hypothesis import given, strategies as st

from lmosplice.dedekind import ValidationError
from lmosplice.sl2z import (
    IDENTITY,
    S,
    Mat2,
    decompose,
    generator,
    recompose,
    splice_factorization,
    splice_recompose,
)
from lmosplice.splice import hopf_chain, parity_flip


@pytest.mark.parametrize("a, want", [(0, (0, -1, 1, 0)), (1, (1, -1, 1, 0)), (-2, (-2, -1, 1, 0))])
def test_generator(a, want):
    assert generator(a) == Mat2(*want)


def test_generator_is_t_power_times_s():
    for a in range(-5, 6):
        assert generator(a) == Mat2(1, a, 0, 1) @ S


@pytest.mark.parametrize(
    "seq, want",
    [([0], (0, -1, 1, 0)), ([0, 0], (-1, 0, 0, -1)), ([0, -1, -1], (1, 1, 0, 1)), ([], (1, 0, 0, 1))],
)
def test_recompose(seq, want):
    assert recompose(seq) == Mat2(*want)


@pytest.mark.parametrize("m", [S, Mat2(1, 1, 0, 1), IDENTITY, Mat2(-1, 0, 0, -1), Mat2(0, 1, -1, 0), Mat2(5, 2, 7, 3)])
def test_decompose_roundtrip(m):
    seq = decompose(m)
    assert seq and recompose(seq) == m


@pytest.mark.parametrize("m", [(1, 2, 3, 4), (2, 0, 0, 2), (1, 0, 0, -1)])
def test_decompose_rejects(m):
    with pytest.raises(ValidationError):
        decompose(Mat2(*m))


def test_decompose_rejects_non_integers():
    from fractions import Fraction
    with pytest.raises(ValidationError):
        decompose(Mat2(Fraction(1), 0, 0, 1))


@st.composite
def sl2(draw):
    seq = draw(st.lists(st.integers(-6, 6), min_size=1, max_size=8))
    return recompose(seq)


@given(sl2())
def test_roundtrip_property(m):
    assert recompose(decompose(m)) == m
    assert splice_recompose(splice_factorization(m)) == m


@given(sl2())
def test_decompose_is_short(m):
    # one entry per Euclidean step on the first column, plus at most four
    steps, a, c = 0, m.a, m.c
    while c:
        a, c = c, a - (a // c) * c
        steps += 1
    assert len(decompose(m)) <= steps + 4


@pytest.mark.parametrize("g", [Mat2(0, -1, 1, 0), IDENTITY, Mat2(0, 1, -1, 0), Mat2(2, 3, 1, 2)])
def test_splice_factorization_convention(g):
    a = splice_factorization(g)
    prod = S
    for x in reversed(a):
        prod = prod @ generator(x)
    assert prod == g


@pytest.mark.parametrize("a", [-3, 0, 1, 4])
def test_single_generator_chain(a):
    assert hopf_chain(S @ generator(a)) == ((a,), "odd")


@given(sl2())
def test_parity_flip(g):
    chain = hopf_chain(g).chain
    flipped = parity_flip(chain)
    assert len(flipped) % 2 != len(chain) % 2
    assert splice_recompose(flipped) == g
