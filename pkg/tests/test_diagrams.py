from fractions import Fraction as F

import pytest

from lmosplice.diagrams import graph, named
from lmosplice.diagrams.element import Element, QuadraticForm, apply_gaussian, apply_operator, pair, relabel_scale
from lmosplice.diagrams.linalg import rref
from lmosplice.diagrams.space import DegreeOverflow, Space, build_space
from lmosplice.diagrams.wheels import modified_bernoulli, omega_big, omega_small, t1, theta, theta2, wheel

B2, B4, B6 = F(1, 48), F(-1, 5760), F(1, 362880)


@pytest.fixture(scope="module")
def sp():
    return build_space(("k",), 5)


@pytest.fixture(scope="module")
def closed():
    return build_space((), 5)


def test_modified_bernoulli():
    assert modified_bernoulli(3) == (B2, B4, B6)


def test_rref_small():
    piv = rref([{0: F(1), 1: F(1)}, {0: F(2), 1: F(2)}, {1: F(1), 2: F(-1)}])
    assert set(piv) == {0, 1}
    assert piv[0] == {0: 1, 2: 1}


def test_closed_dimensions(closed):
    assert closed.graded_dimensions()[:5] == [1, 0, 1, 0, 2]


def test_one_colour_connected_basis(sp):
    names = {graph.canonical(d)[0] for d in
             (named.theta(), named.wheel(2, "k"), named.theta2(), named.t1("k"), named.wheel(4, "k"))}
    basis = {graph.canonical(sp.basis[i])[0] for i in sp.connected_basis()}
    assert basis == names
    assert Space(("k",), 2).build_all().connected_basis().__len__() == 2  # theta, w2


def test_odd_degrees_vanish(sp):
    for t in (1, 3, 5):
        for legs in ((), ("k",), ("k",) * 3, ("k",) * 5):
            if len(legs) <= t + 2 and (len(legs) - t) % 2 == 0:
                assert sp.sector(t, legs).dimension == 0


def test_named_elements_are_basis_vectors(sp):
    for e in (theta(sp), wheel(sp, 2, "k"), theta2(sp), t1(sp, "k"), wheel(sp, 4, "k")):
        ((m, c),) = e.terms.items()
        assert len(m) == 1 and c == 1


def test_as_relation(sp):
    w = named.wheel(2, "k")
    assert Element.of(sp, w.flip(0)) == -wheel(sp, 2, "k")
    assert Element.of(sp, w.flip(0).flip(1)) == wheel(sp, 2, "k")


def test_odd_wheels_vanish(sp):
    assert not Element.of(sp, named.wheel(1, "k"))
    assert not Element.of(sp, named.wheel(3, "k"))


def test_crossed_and_necklace(sp):
    assert Element.of(sp, named.crossed()) == theta2(sp).scale(F(1, 2))
    assert Element.of(sp, named.necklace()) == theta2(sp)


def test_canonical_invariance():
    d = named.t1("k")
    perm = list(range(len(d.match)))
    # swap the two blocks of half-edges of vertices 0 and 1
    perm[0:3], perm[3:6] = [3, 4, 5], [0, 1, 2]
    e = d.relabel_half_edges(perm)
    assert graph.canonical(d) == graph.canonical(e)


def test_product_and_truncation(sp):
    th, t2 = theta(sp), theta2(sp)
    one = Element.unit(sp)
    assert one * th == th
    assert (th * th).terms and len((th * th).terms) == 1
    assert not t2 * t2
    assert (th * th * th).terms == {}  # degree 6 > cap 5


def test_exp(sp):
    th = theta(sp)
    a = F(3, 7)
    assert Element(sp).exp() == Element.unit(sp)
    assert th.scale(a).exp() == Element.unit(sp) + th.scale(a) + (th * th).scale(a * a / 2)
    x = wheel(sp, 2, "k").scale(B2) + wheel(sp, 4, "k").scale(B4)
    w2 = wheel(sp, 2, "k")
    assert x.exp() == Element.unit(sp) + x + (w2 * w2).scale(B2 * B2 / 2)


def test_inverse(sp):
    x = Element.unit(sp) + theta(sp).scale(2) + wheel(sp, 2, "k")
    assert x * x.inverse() == Element.unit(sp)


def test_pairing(sp):
    one = Element.unit(sp)
    w2 = wheel(sp, 2, "k")
    assert pair(one, one, {"k"}) == one
    assert not pair(w2, theta(sp), {"k"})
    assert pair(w2, w2, {"k"}) == theta2(sp).scale(2)


def test_gaussian(sp):
    w2 = wheel(sp, 2, "k")
    a = F(5, 3)
    assert apply_gaussian({}, w2) == w2
    assert apply_gaussian({("k", "k"): a / 2}, w2) == w2 + theta(sp).scale(a)


def test_quadratic_form_symmetric():
    q = QuadraticForm({("b", "a"): 1, ("a", "b"): 2})
    assert q == {("a", "b"): 3}
    assert q.weight(("a", "b")) == 3
    assert QuadraticForm({("a", "a"): 1}).weight(("a", "a")) == 2


def test_closure_of_t1(sp):
    closed_t1 = apply_gaussian({("k", "k"): F(1, 2)}, t1(sp, "k")).homogeneous(4)
    assert closed_t1.coordinate(theta2(sp)) == 1


def test_relabel_scale():
    sp = Space(("k1", "k2"), 5)
    w = wheel(sp, 2, "k1")
    assert relabel_scale(w, "k1", "k2", F(-1, 3)) == wheel(sp, 2, "k2").scale(F(1, 9))
    assert relabel_scale(theta(sp), "k1", "k2", 7) == theta(sp)
    assert relabel_scale(w, "k1", "k1") == w
    with pytest.raises(ValueError):
        relabel_scale(w, "k1", "z")


def test_omega_big_values(sp):
    w2, w4 = wheel(sp, 2, "k"), wheel(sp, 4, "k")
    want = Element.unit(sp) + w2.scale(B2) + (w2 * w2).scale(B2 * B2 / 2) + w4.scale(B4)
    assert omega_big(sp, "k") == want
    small = Space(("k",), 2)
    assert omega_big(small, "k") == Element.unit(small) + wheel(small, 2, "k").scale(B2)
    zero = Space(("k",), 0)
    assert omega_big(zero, "k") == Element.unit(zero)


def test_omega_small(closed):
    # the degree-4 coefficient is 2 b_2^2
    assert omega_small(closed) == Element.unit(closed) + theta2(closed).scale(2 * B2 * B2)
    for cap in (0, 2):
        s = Space((), cap)
        assert omega_small(s) == Element.unit(s)


@pytest.mark.parametrize("alpha", [F(1), F(-1), F(1, 2), F(3), F(-5, 7)])
def test_wheeling_identity(sp, alpha):
    big = omega_big(sp, "k")
    assert apply_gaussian({("k", "k"): alpha / 2}, big) == theta(sp).scale(alpha / 48).exp() * big


def test_operator_against_gaussian(sp):
    # d_D with D = exp(a/2 strut) cannot be represented (struts); compare a wheel operator instead:
    # d_{w2}(w2) glues both legs of w2 onto both legs of w2 in 2 ways
    w2 = wheel(sp, 2, "k")
    assert apply_operator(w2, w2) == theta2(sp).scale(2)
    assert apply_operator(Element.unit(sp), w2) == w2


def test_degree_overflow():
    with pytest.raises(DegreeOverflow):
        Space((), 7)
    sp = Space((), 2)
    with pytest.raises(DegreeOverflow):
        sp.reduce(named.theta2(), truncate=False)


def test_struts_rejected(sp):
    strut = graph.build(0, ["k", "k"], [(0, 1)])
    with pytest.raises(ValueError):
        sp.reduce(strut)


def test_mixed_spaces_rejected(sp):
    other = Space(("k",), 5)
    with pytest.raises(ValueError):
        theta(sp) + theta(other)


def test_module_level_operations(sp):
    from lmosplice.diagrams import exp_element, product, reduce
    th = theta(sp)
    assert reduce(named.theta(), sp) == th
    assert product(Element.unit(sp), th) == th
    assert product(theta2(sp), theta2(sp)) == Element(sp)
    assert exp_element(Element(sp)) == Element.unit(sp)
    with pytest.raises(ValueError):
        exp_element(Element.unit(sp))
