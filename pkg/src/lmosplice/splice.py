"""Low-degree LMO invariants of splices of two framed knots.

The gluing homeomorphism acts on the boundary torus homology by the
unimodular matrix ``(p, r; q, s)``.  Knots enter through :class:`KnotRecord`
(the degree <= 5 data of their wheeled Kontsevich-LMO invariant) and the
splice is evaluated either by the closed forms for the Casson-Walker
invariant and for ``lambda_2`` or symbolically in the diagram engine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

from .dedekind import ValidationError, dedekind_symbol, sgn
from .diagrams.element import Element, QuadraticForm, apply_gaussian, pair, relabel_scale
from .diagrams.space import Space
from .diagrams.wheels import modified_bernoulli, omega_small, t1, theta, theta2, wheel
from .sl2z import Mat2, splice_factorization
from .tridiag import Tridiagonal, signature_recursive

K1, K2 = "k1", "k2"


class NotQHS(ValueError):
    """The spliced manifold is not a rational homology sphere."""


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagree."""


class FramingFraction(NamedTuple):
    u: int
    v: int = 1

    @classmethod
    def checked(cls, u: int, v: int = 1) -> "FramingFraction":
        if v <= 0 or gcd(u, v) != 1:
            raise ValidationError(f"framing {u}/{v} must be reduced with positive denominator")
        return cls(u, v)

    @property
    def value(self) -> Fraction:
        return Fraction(self.u, self.v)

    def is_null(self) -> bool:
        return self.u == 0 and self.v == 1

    def __str__(self) -> str:
        return f"{self.u}/{self.v}"


NULL = FramingFraction(0, 1)


@dataclass(frozen=True)
class KnotRecord:
    """Degree <= 5 data of a framed knot in a rational homology sphere.

    ``a2``, ``a4`` are Conway coefficients, ``v_coeff`` the coefficient of the
    two-legged degree-4 diagram in the symmetrized Kontsevich-LMO invariant.
    """

    ambient_lambda_w: Fraction = Fraction(0)
    ambient_lambda2: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    v_coeff: Fraction = Fraction(0)
    framing: FramingFraction = NULL
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for f in ("ambient_lambda_w", "ambient_lambda2", "a2", "a4", "v_coeff"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        object.__setattr__(self, "framing", FramingFraction.checked(*self.framing))

    @property
    def alexander_d2(self) -> Fraction:
        """Second derivative of the symmetrized Alexander polynomial at 1."""
        return 2 * self.a2

    @property
    def alexander_d4(self) -> Fraction:
        return 24 * (self.a2 + self.a4)


UNKNOT = KnotRecord(name="unknot")


class SpliceResult(NamedTuple):
    lambda_w: Fraction
    lambda2: Fraction
    raw: Optional[Element] = None


def _gluing(g) -> Mat2:
    g = Mat2(*g)
    if any(not isinstance(x, int) for x in g) or g.det() != 1:
        raise ValidationError(f"gluing matrix {g} must be integral with determinant 1")
    return g


# ---------------------------------------------------------------- homology

def qhs_lambda(g, f1: FramingFraction, f2: FramingFraction) -> int:
    p, r, q, s = _gluing(g)
    (u1, v1), (u2, v2) = f1, f2
    return q * u1 * u2 + r * v1 * v2 + s * u2 * v1 + p * v2 * u1


def is_qhs(g, f1: FramingFraction = NULL, f2: FramingFraction = NULL) -> tuple[bool, int]:
    lam = qhs_lambda(g, f1, f2)
    return lam != 0, lam


class HopfChain(NamedTuple):
    chain: tuple
    parity: str


def hopf_chain(g) -> HopfChain:
    a = tuple(splice_factorization(_gluing(g)))
    return HopfChain(a, "even" if len(a) % 2 == 0 else "odd")


def parity_flip(chain) -> tuple:
    """Another chain for the same gluing, of opposite length parity.

    ``generator(-1)^3 = I``, so three extra entries -1 change nothing but n.
    """
    return tuple(chain) + (-1, -1, -1)


def linking_matrix(g, f1: FramingFraction = NULL, f2: FramingFraction = NULL, chain=None) -> Tridiagonal:
    a = hopf_chain(g).chain if chain is None else tuple(chain)
    return Tridiagonal([Fraction(f1.u, f1.v), *a, Fraction(f2.u, f2.v)])


def kappa_routes(g, f1: FramingFraction = NULL, f2: FramingFraction = NULL, chain=None) -> tuple:
    """The branch formula, the alternate (tau_2) formula, and 3 sig - tr."""
    p, r, q, s = _gluing(g)
    (u1, v1), (u2, v2) = f1, f2
    lam = qhs_lambda(g, f1, f2)
    if lam == 0:
        raise NotQHS(f"lambda = 0 for gluing {Mat2(*g)}")
    tau1, tau2 = q * u1 + s * v1, q * u2 + p * v2
    framings = Fraction(u1, v1) + Fraction(u2, v2)
    if q != 0:
        base = dedekind_symbol(s, q) - Fraction(s + p, q)
        branch = base + 3 * sgn(q * tau1) + 3 * sgn(lam * tau1) - framings
        alternate = base + 3 * sgn(q * tau2) + 3 * sgn(lam * tau2) - framings
    else:
        branch = s * (3 * sgn(lam) - r) - framings
        alternate = p * (3 * sgn(lam) - r) - framings
    lm = linking_matrix(g, f1, f2, chain)
    direct = 3 * signature_recursive(lm) - lm.trace()
    return Fraction(branch), Fraction(alternate), Fraction(direct)


def kappa(g, f1: FramingFraction = NULL, f2: FramingFraction = NULL) -> Fraction:
    routes = kappa_routes(g, f1, f2)
    if len(set(routes)) != 1:
        raise ConsistencyError(f"kappa routes disagree: {routes}")
    return routes[0]


# ---------------------------------------------------------------- closed forms

def _null_framed(g, *records: KnotRecord) -> tuple:
    p, r, q, s = _gluing(g)
    if r == 0:
        raise NotQHS("r = 0: the splice has infinite first homology")
    for k in records:
        if not k.framing.is_null():
            raise ValidationError("closed forms need null-homologous knots with preferred framing")
    return p, r, q, s


def casson_walker(g, k1: KnotRecord, k2: KnotRecord) -> Fraction:
    p, r, q, s = _null_framed(g, k1, k2)
    return (
        k1.ambient_lambda_w
        + k2.ambient_lambda_w
        - dedekind_symbol(p, r) / 12
        + Fraction(p, r) * k1.alexander_d2
        + Fraction(s, r) * k2.alexander_d2
    )


def lambda2_splice(g, k1: KnotRecord, k2: KnotRecord) -> Fraction:
    p, r, q, s = _null_framed(g, k1, k2)
    d1, d2 = k1.alexander_d2, k2.alexander_d2
    e1, e2 = k1.alexander_d4, k2.alexander_d4
    inv_r2 = Fraction(1, r * r)
    pp, ss = Fraction(p * p, r * r), Fraction(s * s, r * r)
    return (
        k1.ambient_lambda2
        + k2.ambient_lambda2
        + Fraction(1, 1152) * (inv_r2 - 1)
        + Fraction(1, 96) * (1 - inv_r2) * (d1 + d2)
        + Fraction(9, 16) * (pp * d1 + ss * d2)
        + Fraction(7, 32) * (pp * d1 ** 2 + ss * d2 ** 2)
        + Fraction(1, 8) * inv_r2 * d1 * d2
        - Fraction(5, 96) * (pp * e1 + ss * e2)
        - Fraction(p, r) * k1.v_coeff
        - Fraction(s, r) * k2.v_coeff
    )


# ---------------------------------------------------------------- diagrammatic route

_SPACES: dict = {}


def splice_space(cap: int = 5) -> Space:
    """Shared lazily-built space with leg colours k1, k2 (caches are reused)."""
    sp = _SPACES.get(cap)
    if sp is None:
        sp = _SPACES[cap] = Space((K1, K2), cap)
    return sp


def _check_cap(space: Space) -> None:
    if space.cap > 5:
        raise ValidationError("knot records only determine the invariant up to degree 5")


def kontsevich_symmetrized(k: KnotRecord, space: Space, color: str) -> Element:
    """Truncated symmetrized Kontsevich-LMO invariant of a preferred-framed knot."""
    _check_cap(space)
    if not k.framing.is_null():
        raise ValidationError("only preferred framings are described by a record")
    b2, b4 = modified_bernoulli(2)
    lw, a2, a4 = k.ambient_lambda_w, k.a2, k.a4
    one_loop = b2 - a2 / 2
    th, w2 = theta(space), wheel(space, 2, color)
    return (
        Element.unit(space)
        + th.scale(lw / 4)
        + theta2(space).scale(k.ambient_lambda2)
        + (th * th).scale(lw ** 2 / 32)
        + w2.scale(one_loop)
        + (th * w2).scale(lw / 4 * one_loop)
        + (w2 * w2).scale(one_loop ** 2 / 2)
        + t1(space, color).scale(k.v_coeff)
        + wheel(space, 4, color).scale(b4 - a2 / 24 + a2 ** 2 / 4 - a4 / 2)
    )


def wheeled_invariant(k: KnotRecord, space: Space, color: str) -> Element:
    """Truncated wheeled invariant: the symmetrized one with theta2 shifted by a2 b2 - 2 b2^2."""
    b2, _ = modified_bernoulli(2)
    shift = k.a2 * b2 - 2 * b2 ** 2
    return kontsevich_symmetrized(k, space, color) + theta2(space).scale(shift)


class FramedElement(NamedTuple):
    element: Element
    form: QuadraticForm


def unwheel_frame(e: Element, phi, color: str) -> FramedElement:
    """Multiply by ``exp(phi theta / 48)`` and record the strut form ``-(phi/2)(c, c)``.

    Struts never enter the quotient space, so the framed representation is the
    pair (element, quadratic form).
    """
    phi = Fraction(phi)
    factor = theta(e.space).scale(phi / 48).exp()
    return FramedElement(e * factor, QuadraticForm({(color, color): -phi / 2}))


def extract_invariants(z: Element) -> tuple[Fraction, Fraction]:
    """``(lambda_W, lambda_2)`` read from ``1 + lambda_W/4 theta + lambda_2 theta2 + ...``."""
    if z.space.cap < 4:
        raise ValidationError("need the degree-4 part")
    if z.leg_colors():
        raise ValidationError("element is not closed")
    if z.constant() != 1:
        raise ConsistencyError(f"constant term is {z.constant()}, expected 1")
    th = theta(z.space)
    lam_w = 4 * z.coordinate(th)
    lam2 = z.coordinate(theta2(z.space))
    if z.coordinate(th * th) != lam_w ** 2 / 32:
        raise ConsistencyError("theta^2 coefficient is not lambda_W^2 / 32")
    return lam_w, lam2


def _glue(space, g_exp, d1, d2, factor, z1, z2) -> Element:
    a = relabel_scale(apply_gaussian({(K1, K1): d1}, z1), K1, K2, factor)
    b = apply_gaussian({(K2, K2): d2}, z2)
    glued = pair(a, b, {K2})
    prefactor = theta(space).scale(g_exp / 48).exp()
    return omega_small(space, K1) * prefactor * glued


def splice_lmo_truncated(g, k1: KnotRecord, k2: KnotRecord, cap: int = 5, space: Optional[Space] = None) -> SpliceResult:
    """Z(M) for null-homologous knots through the diagram engine."""
    p, r, q, s = _null_framed(g, k1, k2)
    space = space or splice_space(cap)
    _check_cap(space)
    z1 = wheeled_invariant(k1, space, K1)
    z2 = wheeled_invariant(k2, space, K2)
    expo = -dedekind_symbol(p, r) + Fraction(p + s, r)
    z = _glue(space, expo, Fraction(-p, 2 * r), Fraction(-s, 2 * r), Fraction(-1, r), z1, z2)
    lw, l2 = extract_invariants(z)
    return SpliceResult(lw, l2, z)


def splice_lmo_general(g, f1: FramingFraction, f2: FramingFraction, z1bar: Element, z2bar: Element) -> Element:
    """Z(M) from unframed wheeled invariants (legs k1 and k2) of arbitrary framed knots."""
    z1bar._same(z2bar)
    f1, f2 = FramingFraction.checked(*f1), FramingFraction.checked(*f2)
    p, r, q, s = _gluing(g)
    (u1, v1), (u2, v2) = f1, f2
    ok, lam = is_qhs(g, f1, f2)
    if not ok:
        raise NotQHS(f"lambda = 0 for gluing {Mat2(*g)} and framings {f1}, {f2}")
    tau1, tau2 = q * u1 + s * v1, q * u2 + p * v2
    return _glue(
        z1bar.space,
        kappa(g, f1, f2),
        Fraction(-v1 * tau2, 2 * lam),
        Fraction(-v2 * tau1, 2 * lam),
        Fraction(-v1 * v2, lam),
        z1bar,
        z2bar,
    )


# ---------------------------------------------------------------- surgery

def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def auxiliary_pq(r: int, s: int) -> tuple[int, int]:
    """Some ``(p, q)`` with ``p s - q r = 1``."""
    g, x, y = _egcd(s, r)
    if abs(g) != 1:
        raise ValidationError(f"r={r}, s={s} are not coprime")
    return x * g, -y * g


def rational_surgery(k: KnotRecord, r: int, s: int, cap: int = 5) -> SpliceResult:
    """(r/s)-surgery on a preferred-framed knot, as the splice with an unknot in S^3."""
    if r == 0 or s == 0 or gcd(r, s) != 1:
        raise ValidationError("r, s must be nonzero and coprime")
    p, q = auxiliary_pq(r, s)
    first = splice_lmo_truncated((p, r, q, s), UNKNOT, k, cap)
    second = splice_lmo_truncated((p + r, r, q + s, s), UNKNOT, k, cap)
    if first.raw != second.raw:
        raise ConsistencyError("result depends on the auxiliary (p, q)")
    return first


def lens(r: int, s: int, cap: int = 5) -> SpliceResult:
    return rational_surgery(UNKNOT, r, s, cap)


def lens_closed_form(r: int, s: int) -> tuple[Fraction, Fraction]:
    return -dedekind_symbol(s, r) / 12, Fraction(1, 1152) * (Fraction(1, r * r) - 1)


def swap_gluing(g) -> Mat2:
    """Gluing matrix describing the same splice with the two knots exchanged."""
    p, r, q, s = _gluing(g)
    return Mat2(s, r, q, p)
