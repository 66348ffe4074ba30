"""Property suites shared by ``lmosplice verify`` and the test-suite.

Every suite takes a :class:`random.Random` and size parameters and returns a
:class:`SuiteResult`; failures carry the offending input so that a red run
is reproducible from the seed alone.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd
from typing import Callable, NamedTuple

from .dedekind import sgn, dedekind_sum, dedekind_symbol, dedekind_symbol_fast, reciprocity_rhs
from .diagrams.element import apply_gaussian
from .diagrams.space import Space
from .diagrams.wheels import omega_big, theta
from .sl2z import Mat2, decompose, recompose, splice_factorization, splice_recompose
from .splice import (
    NULL,
    FramingFraction,
    KnotRecord,
    NotQHS,
    auxiliary_pq,
    casson_walker,
    kappa_routes,
    lambda2_splice,
    splice_lmo_truncated,
)
from .tridiag import (
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


class SuiteResult(NamedTuple):
    name: str
    cases: int
    failures: list

    @property
    def ok(self) -> bool:
        return self.cases > 0 and not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"


# ---------------------------------------------------------------- generators

def random_fraction(rng: random.Random, num: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_sl2(rng: random.Random, bound: int = 40) -> Mat2:
    """Random determinant-one matrix: a coprime first column completed by Euclid."""
    while True:
        a, c = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if gcd(a, c) == 1:
            break
    # a d - b c = 1  <=>  with (p, q) = auxiliary_pq(c, a): p a - q c = 1
    d, b = auxiliary_pq(c, a)
    k = rng.randint(-3, 3)
    return Mat2(a, b + k * a, c, d + k * c)


def random_gluing(rng: random.Random, bound: int = 9) -> Mat2:
    """Random ``(p, r; q, s)`` with ``r != 0``."""
    while True:
        g = random_sl2(rng, bound)
        if g.b != 0:
            return g


def random_record(rng: random.Random) -> KnotRecord:
    return KnotRecord(
        ambient_lambda_w=random_fraction(rng),
        ambient_lambda2=random_fraction(rng),
        a2=rng.randint(-4, 4),
        a4=rng.randint(-4, 4),
        v_coeff=random_fraction(rng, 6, 3),
    )


def random_framing(rng: random.Random) -> FramingFraction:
    u, v = rng.randint(-9, 9), rng.randint(1, 5)
    g = gcd(u, v)
    return FramingFraction(u // g, v // g)


# ---------------------------------------------------------------- suites

def reciprocity(rng: random.Random, n: int = 10_000, bound: int = 1000) -> SuiteResult:
    fails, count = [], 0
    while count < n:
        p, q = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if p == 0 or q == 0 or gcd(p, q) != 1:
            continue
        count += 1
        lhs = dedekind_symbol(p, q) + dedekind_symbol(q, p)
        if lhs != reciprocity_rhs(p, q) or dedekind_symbol_fast(p, q) != 12 * sgn(q) * dedekind_sum(p, q):
            fails.append((p, q))
    return SuiteResult("reciprocity", count, fails)


def random_tridiagonal(rng: random.Random, max_len: int = 8, integral: bool = False) -> Tridiagonal:
    n = rng.randint(1, max_len)
    if integral:
        return Tridiagonal([rng.randint(-3, 3) for _ in range(n)])
    # small entries make singular and nearly singular cases frequent
    return Tridiagonal([random_fraction(rng, 3, 2) for _ in range(n)])


def signatures(rng: random.Random, n: int = 10_000) -> SuiteResult:
    fails = []
    for _ in range(n):
        t = random_tridiagonal(rng)
        oracle = signature_oracle(t)
        if signature_recursive(t) != oracle or signature_recursive_left(t) != oracle:
            fails.append(tuple(t))
    return SuiteResult("signatures", n, fails)


def corners(rng: random.Random, n: int = 10_000) -> SuiteResult:
    fails = []
    for _ in range(n):
        t = random_tridiagonal(rng)
        gamma = associated_mat2(t).c
        try:
            inv = dense_inverse(t.dense())
        except SingularMatrix:
            inv = None
        if (inv is None) != (gamma == 0):
            fails.append(tuple(t))
            continue
        if inv is not None:
            c = inverse_corners(t)
            if (c.top_left, c.off_corner, c.bottom_right) != (inv[0][0], inv[0][-1], inv[-1][-1]):
                fails.append(tuple(t))
    return SuiteResult("corners", n, fails)


def kirby_melvin_suite(rng: random.Random, n: int = 10_000, exhaustive_len: int = 6) -> SuiteResult:
    fails, count = [], 0
    for length in range(1, exhaustive_len + 1):
        for t in itertools.product(range(-3, 4), repeat=length):
            count += 1
            km = kirby_melvin(t)
            if km.lhs != km.rhs:
                fails.append(t)
    for _ in range(n):
        t = random_tridiagonal(rng, 8, integral=True)
        count += 1
        km = kirby_melvin(t)
        if km.lhs != km.rhs:
            fails.append(tuple(t))
    return SuiteResult("kirby-melvin", count, fails)


def sl2_roundtrip(rng: random.Random, n: int = 10_000) -> SuiteResult:
    fails = []
    for _ in range(n):
        m = random_sl2(rng)
        if recompose(decompose(m)) != m or splice_recompose(splice_factorization(m)) != m:
            fails.append(tuple(m))
    return SuiteResult("sl2-roundtrip", n, fails)


def diagram_dims(rng: random.Random = None) -> SuiteResult:
    fails = []
    closed = Space((), 4).build_all()
    if closed.graded_dimensions() != [1, 0, 1, 0, 2]:
        fails.append(("closed", closed.graded_dimensions()))
    one = Space(("k",), 5).build_all()
    if len(one.connected_basis()) + 1 != 6:
        fails.append(("strutless", one.dump()))
    return SuiteResult("diagram-dims", 2, fails)


DEFAULT_ALPHAS = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3), Fraction(-5, 7))


def d_omega(rng: random.Random = None, alphas=DEFAULT_ALPHAS, cap: int = 5) -> SuiteResult:
    """``d_E(Omega) = exp(alpha theta / 48) Omega`` for ``E = exp(alpha/2 strut)``."""
    fails = []
    sp = Space(("k",), cap).build_all()
    big = omega_big(sp, "k")
    th = theta(sp)
    for alpha in alphas:
        lhs = apply_gaussian({("k", "k"): Fraction(alpha) / 2}, big)
        if lhs != th.scale(Fraction(alpha, 48)).exp() * big:
            fails.append(alpha)
    return SuiteResult("d-omega", len(alphas), fails)


def fujita_consistency(rng: random.Random, n: int = 200) -> SuiteResult:
    fails = []
    for _ in range(n):
        g, k1, k2 = random_gluing(rng), random_record(rng), random_record(rng)
        if splice_lmo_truncated(g, k1, k2).lambda_w != casson_walker(g, k1, k2):
            fails.append((tuple(g), k1, k2))
    return SuiteResult("fujita-consistency", n, fails)


def lambda2_consistency(rng: random.Random, n: int = 200) -> SuiteResult:
    fails = []
    for _ in range(n):
        g, k1, k2 = random_gluing(rng), random_record(rng), random_record(rng)
        if splice_lmo_truncated(g, k1, k2).lambda2 != lambda2_splice(g, k1, k2):
            fails.append((tuple(g), k1, k2))
    return SuiteResult("lambda2-consistency", n, fails)


def kappa_threeway(rng: random.Random, n: int = 500) -> SuiteResult:
    fails, count = [], 0
    while count < n:
        g = random_sl2(rng, 9)
        f1, f2 = random_framing(rng), random_framing(rng)
        try:
            routes = kappa_routes(g, f1, f2)
        except NotQHS:
            continue
        count += 1
        if len(set(routes)) != 1:
            fails.append((tuple(g), f1, f2, routes))
    null = 0
    for _ in range(n // 5):
        g = random_gluing(rng)
        null += 1
        p, r, q, s = g
        if set(kappa_routes(g, NULL, NULL)) != {-dedekind_symbol(p, r) + Fraction(p + s, r)}:
            fails.append((tuple(g), "null"))
    return SuiteResult("kappa-threeway", count + null, fails)


SUITES: dict[str, Callable] = {
    "reciprocity": reciprocity,
    "signatures": signatures,
    "kirby-melvin": kirby_melvin_suite,
    "sl2-roundtrip": sl2_roundtrip,
    "diagram-dims": diagram_dims,
    "d-omega": d_omega,
    "fujita-consistency": fujita_consistency,
    "lambda2-consistency": lambda2_consistency,
    "kappa-threeway": kappa_threeway,
}

# sizes used by the command line runner; the test-suite passes its own
CLI_SIZES = {
    "reciprocity": {"n": 10_000},
    "signatures": {"n": 2_000},
    "kirby-melvin": {"n": 2_000, "exhaustive_len": 5},
    "sl2-roundtrip": {"n": 2_000},
    "fujita-consistency": {"n": 50},
    "lambda2-consistency": {"n": 50},
    "kappa-threeway": {"n": 500},
}


def run(name: str, seed: int = 0, **sizes) -> SuiteResult:
    rng = random.Random(f"{name}:{seed}")
    kwargs = dict(CLI_SIZES.get(name, {}))
    kwargs.update(sizes)
    return SUITES[name](rng, **kwargs)
