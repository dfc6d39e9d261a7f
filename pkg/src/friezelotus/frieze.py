"""Positive integer friezes of finite width and their polygon bijection.

Indexing
========
Entries live on pairs of integers.  Row d of the classical offset picture
holds the values at pairs (i, i+d): row 0 is all 0, row 1 all 1, row 2 is the
quiddity row, and rows m-1 / m close the array with 1s and 0s again (m is the
period, the width is w = m - 3).  A quiddity tuple ``q`` feeds positions
0..m-1, i.e. value(i-1, i+1) = q[i % m].

Two reductions resolve every index pair into the stored triangular
fundamental domain {(i, j) : 0 <= i < j <= m-1}: both indices are periodic
with period m, and value(i, j) = value(j, i + m) (the glide reflection).
Together these say a value depends only on the unordered pair of residues
mod m, which is exactly how ``Frieze.entry`` normalises.

A diagonal [u, v] of the associated polygon (vertices labelled 1..m)
corresponds to the pair (u-1, v-1) here; the triangulation's diagonals are
precisely the interior pairs carrying the value 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .contfrac import continuant
from .polygon import TriangulatedPolygon, polygon_from_quiddity, quiddity_of


@dataclass(frozen=True)
class Frieze:
    """Width m-3 frieze stored as its fundamental domain.

    Construct through :func:`frieze_from_quiddity`, which validates the
    diamond rule eagerly; a ``Frieze`` value is always globally consistent.
    """

    m: int
    quiddity: tuple[int, ...]
    entries: dict[tuple[int, int], int] = field(compare=False)

    @property
    def width(self) -> int:
        return self.m - 3

    def entry(self, i: int, j: int) -> int:
        """Value at any integer pair, via periodicity and the glide map."""
        ri, rj = i % self.m, j % self.m
        if ri == rj:
            return 0
        return self.entries[(ri, rj) if ri < rj else (rj, ri)]

    def row(self, d: int, start: int = 0, count: int | None = None) -> list[int]:
        """Entries (i, i+d) for i = start, ..., start+count-1."""
        if count is None:
            count = self.m
        return [self.entry(i, i + d) for i in range(start, start + count)]


def frieze_from_quiddity(q: Sequence[int]) -> Frieze:
    """Build and validate the frieze whose quiddity row is ``q``.

    Rows are propagated with the diamond rule
    value(i,j) = (value(i,j-1)*value(i+1,j) - 1) / value(i+1,j-1); the input
    is rejected with the first offending diamond if any entry comes out
    non-integral or non-positive, or if the closing row is not all 1s.
    """
    q = tuple(q)
    m = len(q)
    if m < 3:
        raise ValueError("quiddity needs length >= 3")
    for t, a in enumerate(q):
        if a < 1:
            raise ValueError(f"quiddity entry {a} at position {t} is not positive")

    rows: list[list[int]] = [[0] * m, [1] * m, [q[(i + 1) % m] for i in range(m)]]
    for d in range(3, m):
        row = []
        for i in range(m):
            num = rows[d - 1][i] * rows[d - 1][(i + 1) % m] - 1
            den = rows[d - 2][(i + 1) % m]
            if num % den != 0:
                raise ValueError(_bad_diamond(i, i + d, "a non-integral entry"))
            val = num // den
            if d <= m - 2 and val < 1:
                raise ValueError(_bad_diamond(i, i + d, f"the non-positive entry {val}"))
            row.append(val)
        rows.append(row)
    if m > 3:
        closing = rows[m - 1]
    else:
        closing = rows[2]
    for i, val in enumerate(closing):
        if val != 1:
            raise ValueError(_bad_diamond(i, i + m - 1, f"closing value {val} instead of 1"))

    entries = {(i, i + d): rows[d][i]
               for d in range(1, m) for i in range(m - d)}
    return Frieze(m=m, quiddity=q, entries=entries)


def _bad_diamond(i: int, j: int, what: str) -> str:
    return (f"not a frieze quiddity: the diamond rule at ({i},{j}) produces {what}")


def frieze_of_triangulation(p: TriangulatedPolygon) -> Frieze:
    """Frieze whose quiddity is the triangle-count sequence of ``p``
    (vertex t+1 of the polygon feeds quiddity position t)."""
    return frieze_from_quiddity(quiddity_of(p))


def triangulation_of_frieze(f: Frieze) -> TriangulatedPolygon:
    """Inverse of :func:`frieze_of_triangulation`, by repeated ear cutting."""
    return polygon_from_quiddity(f.quiddity)


def complete_quiddity(prefix: Sequence[int]) -> tuple[int, ...]:
    """Extend w+1 consecutive quiddity values of a width-w frieze by the two
    remaining ones, which are the continuants of the prefix minus its last
    (respectively first) element."""
    prefix = tuple(prefix)
    if len(prefix) < 1:
        raise ValueError("prefix must contain at least one entry (width 0)")
    full = prefix + (continuant(prefix[:-1]), continuant(prefix[1:]))
    frieze_from_quiddity(full)  # reject unextendable prefixes
    return full


def entry_by_continuant(q: Sequence[int], i: int, j: int) -> int:
    """Direct continuant form of an entry: P_{j-i-1}(q[i+1], ..., q[j-1])."""
    m = len(q)
    return continuant([q[t % m] for t in range(i + 1, j)])
