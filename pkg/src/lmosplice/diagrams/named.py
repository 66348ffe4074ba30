"""Named diagrams: wheels, theta, and the degree-4 diagrams used in low degree.

Wheels are oriented uniformly as ``(previous rim, next rim, spoke)`` at every
vertex, i.e. the planar counterclockwise convention.  The other named
diagrams are produced from wheels by gluing, so their orientations are
inherited rather than chosen:

* ``theta``   closes the two legs of the 2-wheel;
* ``theta2``  glues two 2-wheels along both legs (so <w2, w2> = 2 theta2);
* ``t1``      glues two 2-wheels along one leg each (its closure is theta2);
* ``crossed`` closes opposite legs of the 4-wheel.
"""
from __future__ import annotations

from functools import lru_cache

from . import graph
from .graph import Diagram


@lru_cache(maxsize=None)
def wheel(n: int, color: str = "k") -> Diagram:
    if n < 1:
        raise ValueError("a wheel needs at least one spoke")
    edges = []
    for i in range(n):
        edges.append((3 * i + 1, 3 * ((i + 1) % n)))
        edges.append((3 * i + 2, 3 * n + i))
    return graph.build(n, [color] * n, edges)


@lru_cache(maxsize=None)
def theta() -> Diagram:
    return graph.glue_legs(wheel(2, "k"), [(0, 1)])


@lru_cache(maxsize=None)
def theta2() -> Diagram:
    w = wheel(2, "k")
    return graph.glue_legs(graph.disjoint_union(w, w), [(0, 2), (1, 3)])


@lru_cache(maxsize=None)
def t1(color: str = "k") -> Diagram:
    w = wheel(2, color)
    return graph.glue_legs(graph.disjoint_union(w, w), [(1, 2)])


@lru_cache(maxsize=None)
def crossed() -> Diagram:
    return graph.glue_legs(wheel(4, "k"), [(0, 2), (1, 3)])


@lru_cache(maxsize=None)
def necklace() -> Diagram:
    """Adjacent closure of the 4-wheel."""
    return graph.glue_legs(wheel(4, "k"), [(0, 1), (2, 3)])


def preferred_diagrams(t: int, legs: tuple) -> list[Diagram]:
    """Diagrams that should become basis elements of their sector when independent."""
    if len(set(legs)) > 1:
        return []
    color = legs[0] if legs else "k"
    out = []
    if not legs and t == 2:
        out.append(theta())
    if not legs and t == 4:
        out.append(theta2())
    if t == 4 and len(legs) == 2:
        out.append(t1(color))
    if legs and len(legs) == t and t % 2 == 0:
        out.append(wheel(t, color))
    return out
