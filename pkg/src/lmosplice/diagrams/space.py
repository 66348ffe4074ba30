"""Degree-truncated spaces of Jacobi diagrams modulo AS and IHX.

The quotient of disjoint unions by the local relations is the polynomial
algebra on its connected part, so a :class:`Space` only builds bases for
connected sectors ``(t, leg colours)`` and represents every element as a
combination of monomials in connected basis diagrams.  Sectors are computed
on first use and then frozen; :func:`build_space` builds them eagerly.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from . import graph
from .graph import Diagram
from .linalg import rref

if TYPE_CHECKING:
    from .element import Element

MAX_DEGREE = 6


class DegreeOverflow(ValueError):
    pass


class Sector:
    """Basis of the connected diagrams with ``t`` trivalent vertices and fixed legs."""

    def __init__(self, space: "Space", t: int, legs: tuple):
        self.t, self.legs = t, legs
        keys: dict[tuple, Diagram] = {}
        for d in graph.enumerate_connected(t, legs):
            c = graph.canonical(d)
            if c is not None and c[0] not in keys:
                keys[c[0]] = graph.from_key(c[0])
        named = {k: (d, s) for k, d, s in space._preferred(t, legs) if k in keys}
        preferred = list(named)
        order = sorted(k for k in keys if k not in preferred) + preferred
        index = {k: i for i, k in enumerate(order)}

        relations = []
        for k in order:
            d = keys[k]
            for h in graph.internal_edges(d):
                row: dict[int, Fraction] = {}
                for term in graph.ihx_partners(d, h):
                    c = graph.canonical(term)
                    if c is None:
                        continue
                    if c[0] not in index:
                        raise AssertionError("IHX left the sector")
                    i = index[c[0]]
                    row[i] = row.get(i, 0) + c[1]
                relations.append(row)
        pivots = rref(relations)
        self.free = [i for i in range(len(order)) if i not in pivots]
        # a free preferred graph is stored with its own orientation: if it equals
        # sign * representative, the representative is sign * (basis vector)
        flip = {i: named[order[i]][1] if order[i] in named else 1 for i in self.free}
        self.ids = [space._register(named[order[i]][0] if order[i] in named else keys[order[i]]) for i in self.free]
        free_id = dict(zip(self.free, self.ids))
        self.reduction: dict[tuple, dict[int, Fraction]] = {}
        for i, k in enumerate(order):
            if i in pivots:
                vec = {free_id[c]: -v * flip[c] for c, v in pivots[i].items() if c != i}
            else:
                vec = {free_id[i]: Fraction(flip[i])}
            self.reduction[k] = vec
        self.n_graphs = len(order)
        self.n_relations = len(relations)

    @property
    def dimension(self) -> int:
        return len(self.ids)


class Space:
    """Jacobi diagrams with legs coloured by ``colors``, truncated above ``cap``.

    Elements from the same ``Space`` object can be combined; all degrees
    refer to the number of trivalent vertices.
    """

    def __init__(self, colors: Iterable[str] = (), cap: int = 5):
        if cap > MAX_DEGREE or cap < 0:
            raise DegreeOverflow(f"cap must lie in 0..{MAX_DEGREE}")
        self.colors = tuple(sorted(set(colors)))
        if any(not isinstance(c, str) for c in self.colors):
            raise TypeError("colours must be strings")
        self.cap = cap
        self.basis: list[Diagram] = []
        self._sectors: dict[tuple, Sector] = {}
        self._mono_diagram: dict[tuple, Diagram] = {(): graph.EMPTY}
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Space(colors={self.colors}, cap={self.cap})"

    # ---------------------------------------------------------------- sectors
    def _register(self, d: Diagram) -> int:
        self.basis.append(d)
        return len(self.basis) - 1

    def _preferred(self, t: int, legs: tuple) -> list[tuple]:
        """``(key, diagram, sign)`` for the named diagrams of a sector."""
        from . import named
        out = []
        for d in named.preferred_diagrams(t, legs):
            c = graph.canonical(d)
            if c is not None:
                out.append((c[0], d, c[1]))
        return out

    def sector(self, t: int, legs: Sequence[str]) -> Sector:
        key = (t, tuple(sorted(legs)))
        s = self._sectors.get(key)
        if s is None:
            s = self._sectors[key] = Sector(self, *key)
        return s

    def sector_keys(self) -> list[tuple]:
        """All connected sectors up to the cap for this space's colours."""
        out = []
        for t in range(1, self.cap + 1):
            for e in range(t % 2, t + 3, 2):
                for legs in itertools.combinations_with_replacement(self.colors, e):
                    out.append((t, legs))
        return out

    def build_all(self) -> "Space":
        for t, legs in self.sector_keys():
            self.sector(t, legs)
        return self

    def connected_basis(self, legs: Optional[Sequence[str]] = None) -> list[int]:
        """Ids of connected basis diagrams, optionally restricted to a leg multiset."""
        self.build_all()
        out = []
        for (t, lg), s in sorted(self._sectors.items()):
            if legs is None or lg == tuple(sorted(legs)):
                out += s.ids
        return out

    def graded_dimensions(self, legs: Sequence[str] = ()) -> list[int]:
        """Dimensions per degree of the full space with the given total legs."""
        self.build_all()
        target = tuple(sorted(legs))
        dims = [0] * (self.cap + 1)
        for mono in self.monomials():
            if self.mono_legs(mono) == target:
                dims[self.mono_degree(mono)] += 1
        return dims

    def monomials(self) -> list[tuple]:
        """Every monomial of degree <= cap in the built basis."""
        ids = sorted(range(len(self.basis)), key=lambda i: self.basis[i].t)
        out = [()]

        def rec(start, mono, deg):
            for k in range(start, len(ids)):
                i = ids[k]
                nd = deg + self.basis[i].t
                if nd > self.cap:
                    continue
                m = mono + (i,)
                out.append(tuple(sorted(m)))
                rec(k, m, nd)

        rec(0, (), 0)
        return out

    # ---------------------------------------------------------------- monomials
    def mono_degree(self, mono: tuple) -> int:
        return sum(self.basis[i].t for i in mono)

    def mono_legs(self, mono: tuple) -> tuple:
        return tuple(sorted(c for i in mono for c in self.basis[i].legs))

    def mono_diagram(self, mono: tuple) -> Diagram:
        d = self._mono_diagram.get(mono)
        if d is None:
            d = self._mono_diagram[mono] = graph.disjoint_union(*(self.basis[i] for i in mono))
        return d

    # ---------------------------------------------------------------- reduction
    def reduce_terms(self, d: Diagram, truncate: bool = True) -> dict[tuple, Fraction]:
        """Class of ``d`` as ``{monomial: coefficient}``."""
        if d.t > self.cap:
            if truncate:
                return {}
            raise DegreeOverflow(f"degree {d.t} exceeds cap {self.cap}")
        terms: dict[tuple, Fraction] = {(): Fraction(1)}
        for comp in graph.components(d):
            if comp.t == 0:
                raise ValueError("struts do not belong to the quotient space")
            c = graph.canonical(comp)
            if c is None:
                return {}
            key, sign = c
            vec = self.sector(comp.t, comp.legs).reduction[key]
            new: dict[tuple, Fraction] = {}
            for m, a in terms.items():
                for i, b in vec.items():
                    mm = tuple(sorted(m + (i,)))
                    new[mm] = new.get(mm, 0) + a * b * sign
            terms = {m: v for m, v in new.items() if v}
            if not terms:
                return {}
        return terms

    def reduce(self, d: Diagram, truncate: bool = False) -> "Element":
        from .element import Element
        return Element(self, self.reduce_terms(d, truncate=truncate))

    def dump(self) -> str:
        """Plain-text listing of the connected basis, one diagram per line."""
        self.build_all()
        lines = []
        for i, d in enumerate(self.basis):
            lines.append(f"[{i}] t={d.t} {d.describe()}")
        return "\n".join(lines)


def build_space(colors: Iterable[str] = (), max_degree: int = 5, eager: Optional[bool] = None) -> Space:
    """Create a space; by default sectors are built eagerly for at most one colour."""
    s = Space(colors, max_degree)
    if eager is None:
        eager = len(s.colors) <= 1
    if eager:
        s.build_all()
    return s
