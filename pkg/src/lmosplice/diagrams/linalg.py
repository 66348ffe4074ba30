"""Sparse exact row reduction over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def rref(rows: Iterable[dict[int, Fraction]]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of sparse rows (column -> value).

    Returns ``{pivot_column: row}``; each row has coefficient 1 at its pivot,
    its pivot is its smallest column, and no row mentions another row's pivot.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        for p in [c for c in row if c in pivots]:
            f = row.get(p)
            if not f:
                continue
            for c, v in pivots[p].items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q, other in pivots.items():
            f = other.get(p)
            if f:
                for c, v in row.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        pivots[p] = row
    return pivots
