"""Unitrivalent graphs with vertex orientations and colored legs.

A :class:`Diagram` with ``t`` trivalent vertices and ``e`` legs has
``3t + e`` half-edges.  Trivalent vertex ``v`` owns half-edges
``3v, 3v+1, 3v+2``, listed in its cyclic order; leg ``j`` owns half-edge
``3t + j``.  ``match`` is the fixed-point-free involution pairing half-edges
into edges.

Orientation reversal at one vertex negates a diagram (AS), so
:func:`canonical` returns a canonical key together with the sign relating the
input to the canonical representative, or ``None`` when the diagram is
forced to vanish.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Diagram:
    t: int
    legs: tuple
    match: tuple

    def __post_init__(self):
        n = 3 * self.t + len(self.legs)
        if len(self.match) != n:
            raise ValueError("match has wrong length")
        for h, k in enumerate(self.match):
            if k == h or self.match[k] != h:
                raise ValueError("match is not a fixed-point-free involution")

    @property
    def degree(self) -> int:
        return self.t

    def leg_half_edge(self, j: int) -> int:
        return 3 * self.t + j

    def owner(self, h: int) -> int:
        """Trivalent vertex owning ``h``, or ``-1 - j`` for leg ``j``."""
        return h // 3 if h < 3 * self.t else -1 - (h - 3 * self.t)

    def is_strut(self) -> bool:
        return self.t == 0 and len(self.legs) == 2

    def flip(self, v: int) -> "Diagram":
        """Reverse the cyclic order at vertex ``v`` (swap its last two slots)."""
        a, b = 3 * v + 1, 3 * v + 2
        perm = list(range(len(self.match)))
        perm[a], perm[b] = b, a
        return self.relabel_half_edges(perm)

    def relabel_half_edges(self, perm: Sequence[int]) -> "Diagram":
        match = [0] * len(self.match)
        for h, k in enumerate(self.match):
            match[perm[h]] = perm[k]
        return Diagram(self.t, self.legs, tuple(match))

    def recolor(self, mapping: dict) -> "Diagram":
        return Diagram(self.t, tuple(mapping.get(c, c) for c in self.legs), self.match)

    def describe(self) -> str:
        """One-line text form: vertex half-edge partners and leg colors."""
        parts = []
        for v in range(self.t):
            parts.append("v%d(%s)" % (v, ",".join(_name(self, self.match[h]) for h in range(3 * v, 3 * v + 3))))
        legs = " ".join(f"L{j}:{c}" for j, c in enumerate(self.legs))
        return " ".join(parts) + (" | " + legs if legs else "")


def _name(d: Diagram, h: int) -> str:
    o = d.owner(h)
    return f"v{o}.{h % 3}" if o >= 0 else f"L{-1 - o}"


EMPTY = Diagram(0, (), ())


def build(t: int, legs: Sequence, edges: Iterable[tuple[int, int]]) -> Diagram:
    match = [-1] * (3 * t + len(legs))
    for a, b in edges:
        if match[a] != -1 or match[b] != -1:
            raise ValueError(f"half-edge used twice in edge {a}-{b}")
        match[a], match[b] = b, a
    if -1 in match:
        raise ValueError("unmatched half-edge")
    return Diagram(t, tuple(legs), tuple(match))


def disjoint_union(*ds: Diagram) -> Diagram:
    t = sum(d.t for d in ds)
    legs = tuple(c for d in ds for c in d.legs)
    edges = []
    toff, loff = 0, 3 * t
    for d in ds:
        def shift(h, d=d, toff=toff, loff=loff):
            return toff + h if h < 3 * d.t else loff + h - 3 * d.t
        edges += [(shift(h), shift(k)) for h, k in enumerate(d.match) if h < k]
        toff += 3 * d.t
        loff += len(d.legs)
    return build(t, legs, edges)


def glue_legs(d: Diagram, pairs: Iterable[tuple[int, int]]) -> Diagram:
    """Join legs pairwise: each pair of legs disappears and their neighbours are joined."""
    match = list(d.match)
    removed = set()
    base = 3 * d.t
    for i, j in pairs:
        a, b = base + i, base + j
        x, y = match[a], match[b]
        if x == b:
            raise ValueError("closing a strut on itself would create a circle")
        match[x], match[y] = y, x
        removed.update((a, b))
    keep = [j for j in range(len(d.legs)) if base + j not in removed]
    new_index = {h: h for h in range(base)}
    new_index.update({base + j: base + k for k, j in enumerate(keep)})
    new_match = tuple(new_index[match[h]] for h in range(base)) + tuple(new_index[match[base + j]] for j in keep)
    return Diagram(d.t, tuple(d.legs[j] for j in keep), new_match)


def components(d: Diagram) -> list[Diagram]:
    """Split into connected components (each returned with fresh numbering)."""
    n_nodes = d.t + len(d.legs)
    parent = list(range(n_nodes))

    def node(h):
        o = d.owner(h)
        return o if o >= 0 else d.t + (-1 - o)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h, k in enumerate(d.match):
        a, b = find(node(h)), find(node(k))
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for x in range(n_nodes):
        groups.setdefault(find(x), []).append(x)
    if len(groups) == 1:
        return [d]
    out = []
    for nodes in sorted(groups.values()):
        verts = [x for x in nodes if x < d.t]
        legs = [x - d.t for x in nodes if x >= d.t]
        t = len(verts)
        old_to_new = {}
        for i, v in enumerate(verts):
            for s in range(3):
                old_to_new[3 * v + s] = 3 * i + s
        for k, j in enumerate(legs):
            old_to_new[3 * d.t + j] = 3 * t + k
        edges = [(old_to_new[h], old_to_new[k]) for h, k in enumerate(d.match) if h < k and h in old_to_new]
        out.append(build(t, [d.legs[j] for j in legs], edges))
    return out


# ---------------------------------------------------------------- canonical form

def _perm_parity(seq: Sequence) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def _refine(d: Diagram) -> list[int]:
    """Colour refinement of trivalent vertices; isomorphism invariant."""
    t = d.t
    leg_colors = []
    nbrs = []
    for v in range(t):
        cols, vs = [], []
        for h in range(3 * v, 3 * v + 3):
            o = d.owner(d.match[h])
            if o >= 0:
                vs.append(o)
            else:
                cols.append(d.legs[-1 - o])
        leg_colors.append(tuple(sorted(cols)))
        nbrs.append(vs)
    labels = leg_colors
    ncls = -1
    while True:
        ranks = {x: i for i, x in enumerate(sorted(set(labels)))}
        col = [ranks[x] for x in labels]
        if len(ranks) == ncls:
            return col
        ncls = len(ranks)
        labels = [(col[v], tuple(sorted(col[w] for w in nbrs[v]))) for v in range(t)]


@lru_cache(maxsize=None)
def canonical(d: Diagram) -> Optional[tuple[tuple, int]]:
    """Canonical key and sign of a connected diagram with ``t >= 1``.

    Returns ``None`` when the diagram vanishes by AS: a self-loop, two legs of
    one colour at a vertex, or an orientation-reversing automorphism.
    """
    t = d.t
    if t == 0:
        raise ValueError("canonical() needs at least one trivalent vertex")
    desc = []  # per vertex: list of (kind, payload) for its 3 slots
    for v in range(t):
        row = []
        for h in range(3 * v, 3 * v + 3):
            o = d.owner(d.match[h])
            if o == v:
                return None
            row.append(("v", o) if o >= 0 else ("l", d.legs[-1 - o]))
        cols = [p for k, p in row if k == "l"]
        if len(cols) != len(set(cols)):
            return None
        desc.append(row)

    col = _refine(d)
    classes = [sorted(v for v in range(t) if col[v] == c) for c in sorted(set(col))]
    best_key = None
    best_signs: set[int] = set()
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [v for p in parts for v in p]
        label = [0] * t
        for i, v in enumerate(order):
            label[v] = i
        key = tuple(
            tuple(sorted((0, label[p], "") if k == "v" else (1, 0, p) for k, p in desc[v]))
            for v in order
        )
        if best_key is not None and key > best_key:
            continue
        sign = 1
        for v in order:
            sort_keys = []
            for s in range(3):
                h = 3 * v + s
                k, p = desc[v][s]
                if k == "v":
                    # rank parallel edges by the half-edge at the lower-labelled end
                    tie = h if label[v] < label[p] else d.match[h]
                    sort_keys.append((0, label[p], "", tie))
                else:
                    sort_keys.append((1, 0, p, 0))
            sign *= _perm_parity(sort_keys)
        if best_key is None or key < best_key:
            best_key, best_signs = key, {sign}
        else:
            best_signs.add(sign)
    if len(best_signs) > 1:
        return None
    return best_key, best_signs.pop()


def from_key(key: tuple) -> Diagram:
    """The canonical representative (sign +1) of a key from :func:`canonical`."""
    t = len(key)
    legs = []
    leg_slots = []
    pending: dict[tuple[int, int], list[int]] = {}
    edges = []
    for i, row in enumerate(key):
        for s, (kind, j, c) in enumerate(row):
            h = 3 * i + s
            if kind == 1:
                leg_slots.append(h)
                legs.append(c)
            elif i < j:
                pending.setdefault((i, j), []).append(h)
            else:
                edges.append((pending[(j, i)].pop(0), h))
    edges += [(h, 3 * t + k) for k, h in enumerate(leg_slots)]
    return build(t, legs, edges)


# ---------------------------------------------------------------- IHX

def ihx_partners(d: Diagram, hu: int) -> tuple[Diagram, Diagram, Diagram]:
    """The three diagrams of the IHX relation at the edge through ``hu``.

    With the edge read as ``u = (A, B, e)`` and ``v = (e, C, D)``, the three
    terms are the input, ``u = (B, C, e), v = (e, A, D)`` and
    ``u = (C, A, e), v = (e, B, D)``; their sum vanishes.
    """
    hv = d.match[hu]
    u, v = d.owner(hu), d.owner(hv)
    assert u >= 0 and v >= 0 and u != v
    pu, pv = hu - 3 * u, hv - 3 * v
    sa, sb = 3 * u + (pu + 1) % 3, 3 * u + (pu + 2) % 3
    sc = 3 * v + (pv + 1) % 3
    out = [d]
    for phi in ({sa: sc, sb: sa, sc: sb}, {sa: sb, sb: sc, sc: sa}):
        match = [0] * len(d.match)
        for h, k in enumerate(d.match):
            match[phi.get(h, h)] = phi.get(k, k)
        out.append(Diagram(d.t, d.legs, tuple(match)))
    return tuple(out)


def internal_edges(d: Diagram) -> list[int]:
    """One half-edge per edge joining two distinct trivalent vertices."""
    out = []
    for h in range(3 * d.t):
        k = d.match[h]
        if h < k < 3 * d.t and h // 3 != k // 3:
            out.append(h)
    return out


# ---------------------------------------------------------------- enumeration

def _multigraphs(degrees: Sequence[int]):
    """Loopless multigraphs with the given degree sequence, as edge lists."""
    n = len(degrees)
    rem = list(degrees)

    def rec(edges, last):
        i = next((v for v in range(n) if rem[v] > 0), None)
        if i is None:
            yield list(edges)
            return
        start = last[1] if last is not None and last[0] == i else i + 1
        for j in range(start, n):
            if rem[j] > 0:
                rem[i] -= 1
                rem[j] -= 1
                edges.append((i, j))
                yield from rec(edges, (i, j))
                edges.pop()
                rem[i] += 1
                rem[j] += 1

    yield from rec([], None)


def _connected(n: int, edges) -> bool:
    seen = {0}
    stack = [0]
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def enumerate_connected(t: int, legs: Sequence) -> list[Diagram]:
    """Every connected diagram with ``t`` trivalent vertices and the given leg colours.

    Loop-free at vertices; the list contains isomorphic duplicates, which
    :func:`canonical` identifies.  Orientations are arbitrary.
    """
    e = len(legs)
    if t < 1 or (3 * t + e) % 2 or e > t + 2:
        return []
    out = []
    colorings = sorted(set(itertools.permutations(sorted(legs))))
    for counts in _leg_distributions(t, e):
        degrees = [3 - c for c in counts]
        for edges in _multigraphs(degrees):
            if t > 1 and not _connected(t, edges):
                continue
            slots = [3 * v for v in range(t)]
            pairs = []
            for a, b in edges:
                pairs.append((slots[a], slots[b]))
                slots[a] += 1
                slots[b] += 1
            leg_slots = [slots[v] + k for v in range(t) for k in range(counts[v])]
            for colors in colorings:
                leg_edges = [(h, 3 * t + j) for j, h in enumerate(leg_slots)]
                out.append(build(t, colors, pairs + leg_edges))
    return out


def _leg_distributions(t: int, e: int):
    """Non-increasing leg counts per vertex summing to ``e``."""
    def rec(prefix, left, cap):
        if len(prefix) == t:
            if left == 0:
                yield tuple(prefix)
            return
        for c in range(min(cap, left, 3), -1, -1):
            yield from rec(prefix + [c], left - c, c)

    yield from rec([], e, 3)
