"""Elements of a truncated diagram space and the operations on them."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Optional

from . import graph
from .graph import Diagram
from .space import Space


class Element:
    """Finite combination ``{monomial: coefficient}`` in a :class:`Space`."""

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms: Optional[Mapping[tuple, Fraction]] = None):
        self.space = space
        cap = space.cap
        self.terms = {
            m: Fraction(v) for m, v in (terms or {}).items() if v and space.mono_degree(m) <= cap
        }

    # ---------------------------------------------------------------- basics
    @classmethod
    def unit(cls, space: Space) -> "Element":
        return cls(space, {(): 1})

    @classmethod
    def of(cls, space: Space, d: Diagram) -> "Element":
        return space.reduce(d, truncate=True)

    def _same(self, other: "Element") -> None:
        if other.space is not self.space:
            raise ValueError("elements live in different spaces")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out.get(m, 0) + v
        return Element(self.space, out)

    def __neg__(self) -> "Element":
        return Element(self.space, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        c = Fraction(c)
        return Element(self.space, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        self._same(other)
        sp = self.space
        out: dict[tuple, Fraction] = {}
        for m1, a in self.terms.items():
            d1 = sp.mono_degree(m1)
            for m2, b in other.terms.items():
                if d1 + sp.mono_degree(m2) > sp.cap:
                    continue
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + a * b
        return Element(sp, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.space is other.space and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (self.space.mono_degree(m), m)):
            name = "*".join(f"b{i}" for i in m) or "1"
            parts.append(f"{self.terms[m]}*{name}")
        return " + ".join(parts)

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def truncate(self, degree: int) -> "Element":
        sp = self.space
        return Element(sp, {m: v for m, v in self.terms.items() if sp.mono_degree(m) <= degree})

    def homogeneous(self, degree: int) -> "Element":
        sp = self.space
        return Element(sp, {m: v for m, v in self.terms.items() if sp.mono_degree(m) == degree})

    def leg_colors(self) -> set:
        return {c for m in self.terms for c in self.space.mono_legs(m)}

    def coordinate(self, named: "Element") -> Fraction:
        """Coefficient of a named element spanning a one-dimensional piece.

        ``named`` must reduce to a multiple of a single monomial.
        """
        if len(named.terms) != 1:
            raise ValueError("named element is not a single basis monomial")
        (m, c), = named.terms.items()
        return self.terms.get(m, Fraction(0)) / c

    # ---------------------------------------------------------------- series
    def exp(self) -> "Element":
        if self.constant():
            raise ValueError("exp needs a vanishing constant term")
        out = Element.unit(self.space)
        power = Element.unit(self.space)
        for n in range(1, self.space.cap + 1):
            power = power * self
            if not power:
                break
            out = out + power.scale(Fraction(1, factorial(n)))
        return out

    def inverse(self) -> "Element":
        c0 = self.constant()
        if not c0:
            raise ZeroDivisionError("constant term is zero")
        y = (self.scale(1 / c0) - Element.unit(self.space))
        out = Element.unit(self.space)
        power = Element.unit(self.space)
        for _ in range(self.space.cap):
            power = power * (-y)
            if not power:
                break
            out = out + power
        return out.scale(1 / c0)


def reduce(d: Diagram, space: Space) -> Element:
    """Class of a diagram; raises DegreeOverflow above the cap."""
    return space.reduce(d, truncate=False)


def product(x: Element, y: Element) -> Element:
    return x * y


def exp_element(x: Element) -> Element:
    return x.exp()


# -------------------------------------------------------------------- gluing

def _legs_by_color(d: Diagram, colors) -> dict:
    out: dict = {c: [] for c in colors}
    for j, c in enumerate(d.legs):
        if c in out:
            out[c].append(j)
    return out


def _pair_monomials(space: Space, m1: tuple, m2: tuple, shared: frozenset) -> dict:
    key = ("pair", m1, m2, shared)
    hit = space._cache.get(key)
    if hit is not None:
        return hit
    out: dict[tuple, Fraction] = {}
    if space.mono_degree(m1) + space.mono_degree(m2) <= space.cap:
        d1, d2 = space.mono_diagram(m1), space.mono_diagram(m2)
        l1, l2 = _legs_by_color(d1, shared), _legs_by_color(d2, shared)
        if all(len(l1[c]) == len(l2[c]) for c in shared):
            u = graph.disjoint_union(d1, d2)
            off = len(d1.legs)
            colors = sorted(shared)
            choices = [itertools.permutations(l2[c]) for c in colors]
            for perms in itertools.product(*choices):
                pairs = [(a, off + b) for c, p in zip(colors, perms) for a, b in zip(l1[c], p)]
                for m, v in space.reduce_terms(graph.glue_legs(u, pairs)).items():
                    out[m] = out.get(m, 0) + v
    out = {m: v for m, v in out.items() if v}
    space._cache[key] = out
    return out


def pair(x: Element, y: Element, shared: Iterable[str]) -> Element:
    """``<x, y>``: glue all legs of the shared colours of x to those of y, all ways."""
    x._same(y)
    shared = frozenset(shared)
    out: dict[tuple, Fraction] = {}
    for m1, a in x.terms.items():
        for m2, b in y.terms.items():
            for m, v in _pair_monomials(x.space, m1, m2, shared).items():
                out[m] = out.get(m, 0) + a * b * v
    return Element(x.space, out)


def _partial_matchings(n: int):
    """All sets of disjoint unordered pairs in range(n)."""
    def rec(i, used, acc):
        if i == n:
            yield list(acc)
            return
        if i in used:
            yield from rec(i + 1, used, acc)
            return
        yield from rec(i + 1, used, acc)
        for j in range(i + 1, n):
            if j not in used:
                acc.append((i, j))
                yield from rec(i + 1, used | {i, j}, acc)
                acc.pop()

    yield from rec(0, frozenset(), [])


def _strut_closures(space: Space, mono: tuple) -> list:
    """For each partial matching of legs: (pair colour types, reduced glued terms)."""
    key = ("struts", mono)
    hit = space._cache.get(key)
    if hit is not None:
        return hit
    d = space.mono_diagram(mono)
    out = []
    for pm in _partial_matchings(len(d.legs)):
        types = tuple(sorted(tuple(sorted((d.legs[i], d.legs[j]))) for i, j in pm))
        terms = space.reduce_terms(graph.glue_legs(d, pm)) if pm else {mono: Fraction(1)}
        if terms:
            out.append((types, terms))
    space._cache[key] = out
    return out


class QuadraticForm(dict):
    """Strut coefficients: ``{(c1, c2): w}`` means ``w * strut(c1, c2)`` in the exponent.

    Keys are stored sorted, so the form is symmetric by construction.
    """

    def __init__(self, entries: Optional[Mapping] = None):
        super().__init__()
        for (a, b), w in (entries or {}).items():
            k = tuple(sorted((a, b)))
            self[k] = self.get(k, Fraction(0)) + Fraction(w)

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        out = QuadraticForm(self)
        for k, w in other.items():
            out[k] = out.get(k, Fraction(0)) + w
        return out

    def weight(self, pair_type: tuple) -> Fraction:
        a, b = pair_type
        w = self.get((a, b), Fraction(0))
        return 2 * w if a == b else w


def apply_gaussian(q: Mapping, y: Element) -> Element:
    """``d_{exp(q)}(y)``: glue struts of ``exp(q)`` to pairs of legs of ``y`` in all ways."""
    q = q if isinstance(q, QuadraticForm) else QuadraticForm(q)
    out: dict[tuple, Fraction] = {}
    for mono, a in y.terms.items():
        for types, terms in _strut_closures(y.space, mono):
            w = a
            for ty in types:
                w *= q.weight(ty)
                if not w:
                    break
            if not w:
                continue
            for m, v in terms.items():
                out[m] = out.get(m, 0) + w * v
    return Element(y.space, out)


def _operator_monomials(space: Space, md: tuple, my: tuple) -> dict:
    key = ("op", md, my)
    hit = space._cache.get(key)
    if hit is not None:
        return hit
    out: dict[tuple, Fraction] = {}
    if space.mono_degree(md) + space.mono_degree(my) <= space.cap:
        dd, dy = space.mono_diagram(md), space.mono_diagram(my)
        colors = sorted(set(dd.legs))
        ld, ly = _legs_by_color(dd, colors), _legs_by_color(dy, colors)
        if all(len(ld[c]) <= len(ly[c]) for c in colors):
            u = graph.disjoint_union(dd, dy)
            off = len(dd.legs)
            choices = [itertools.permutations(ly[c], len(ld[c])) for c in colors]
            for images in itertools.product(*choices):
                pairs = [(a, off + b) for c, img in zip(colors, images) for a, b in zip(ld[c], img)]
                for m, v in space.reduce_terms(graph.glue_legs(u, pairs)).items():
                    out[m] = out.get(m, 0) + v
    out = {m: v for m, v in out.items() if v}
    space._cache[key] = out
    return out


def apply_operator(dx: Element, y: Element) -> Element:
    """``d_D(y)``: glue all legs of ``D`` to some legs of ``y``, in all ways."""
    dx._same(y)
    out: dict[tuple, Fraction] = {}
    for md, a in dx.terms.items():
        for my, b in y.terms.items():
            for m, v in _operator_monomials(y.space, md, my).items():
                out[m] = out.get(m, 0) + a * b * v
    return Element(y.space, out)


def relabel_scale(y: Element, source: str, target: str, factor=1, space: Optional[Space] = None) -> Element:
    """Recolour ``source`` legs as ``target`` and multiply by ``factor`` per recoloured leg."""
    dest = space or y.space
    if dest.colors and target not in dest.colors:
        raise ValueError(f"colour {target!r} not in {dest.colors}")
    factor = Fraction(factor)
    out: dict[tuple, Fraction] = {}
    for mono, a in y.terms.items():
        key = ("relabel", mono, source, target, id(dest))
        terms = y.space._cache.get(key)
        if terms is None:
            d = y.space.mono_diagram(mono)
            terms = dest.reduce_terms(d.recolor({source: target}))
            y.space._cache[key] = terms
        n = sum(1 for c in y.space.mono_legs(mono) if c == source)
        w = a * factor ** n
        for m, v in terms.items():
            out[m] = out.get(m, 0) + w * v
    return Element(dest, out)
