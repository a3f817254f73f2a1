"""Exact integer linear algebra: incremental row echelon, rank, left nullspace.

All elimination is fraction-free (cross-multiplication with gcd control), so
ranks and nullspaces are exact for arbitrary integer matrices.  Rational rows
are admitted by clearing denominators row-wise, which leaves row spaces
unchanged.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ._kernels import reduce_against


class IntEchelon:
    """Incremental echelon form over the integers.

    Stored rows are gcd-normalized with positive leading entry, zero strictly
    left of their pivot column.  ``width`` bounds the columns where pivots may
    appear; longer rows carry augmented bookkeeping columns that are updated
    consistently but never used as pivots.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivot_cols: list[int] = []
        self.rows: list[list[int]] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[int]) -> list[int]:
        """Return the reduction of ``row`` against the echelon (a fresh list)."""
        return reduce_against(list(row), self.pivot_cols, self.rows)

    def insert(self, row: Sequence[int]) -> int | None:
        """Reduce and adjoin ``row``; returns its pivot column, or None when
        the row is dependent (zero within the pivot width)."""
        r = self.reduce(row)
        pivot = None
        for i in range(self.width):
            if r[i]:
                pivot = i
                break
        if pivot is None:
            return None
        if r[pivot] < 0:
            r = [-v for v in r]
        at = bisect_left(self.pivot_cols, pivot)
        self.pivot_cols.insert(at, pivot)
        self.rows.insert(at, r)
        return pivot

    def is_member(self, row: Sequence[int]) -> bool:
        return not any(self.reduce(row)[: self.width])


def clear_denominators(row: Iterable[Fraction]) -> list[int]:
    """Scale a rational row to a primitive integer row (empty rows pass through)."""
    row = list(row)
    denom = 1
    for v in row:
        if isinstance(v, Fraction):
            denom = lcm(denom, v.denominator)
    out = []
    for v in row:
        if isinstance(v, Fraction):
            out.append(int(v * denom))
        else:
            out.append(int(v) * denom)
    return out


def rank(rows: Iterable[Sequence[int]], width: int) -> int:
    ech = IntEchelon(width)
    for r in rows:
        ech.insert(r)
    return ech.rank


def left_nullspace(rows: Sequence[Sequence[int]], width: int) -> list[list[int]]:
    """Basis of { y : y . M = 0 } for the matrix M with the given integer rows.

    Implemented by eliminating identity-augmented rows; every row that dies in
    the main columns leaves its combination vector in the augmentation.
    """
    m = len(rows)
    ech = IntEchelon(width)
    out: list[list[int]] = []
    for i, r in enumerate(rows):
        aug = list(r) + [0] * m
        aug[width + i] = 1
        reduced = ech.reduce(aug)
        if any(reduced[:width]):
            ech_insert_reduced(ech, reduced)
        else:
            combo = reduced[width:]
            if any(combo):
                out.append(combo)
    return out


def ech_insert_reduced(ech: IntEchelon, reduced: list[int]) -> int:
    """Adjoin an already-reduced nonzero row to ``ech`` (internal helper)."""
    pivot = next(i for i in range(ech.width) if reduced[i])
    if reduced[pivot] < 0:
        reduced = [-v for v in reduced]
    at = bisect_left(ech.pivot_cols, pivot)
    ech.pivot_cols.insert(at, pivot)
    ech.rows.insert(at, reduced)
    return pivot


def solve_int(rows: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """One rational solution x of  x . rows = target, or None.

    Small helper used for expressing kernel vectors; sizes here are tiny, so
    plain fraction-free elimination with an augmented right-hand side is fine.
    """
    width = len(target)
    m = len(rows)
    ech = IntEchelon(width)
    for i, r in enumerate(rows):
        aug = list(r) + [0] * m
        aug[width + i] = 1
        ech.insert(aug)
    reduced = ech.reduce(list(target) + [0] * m)
    if any(reduced[:width]):
        return None
    # target = -combo . rows  after scaling: reconstruct the exact rational
    # combination by tracking the scale factor separately.
    # reduce_against scales the row as it goes, so recover scale from a
    # fresh reduction that augments the target with its own slot.
    aug = list(target) + [0] * (m + 1)
    aug[width + m] = 1
    reduced = reduce_against(aug, ech.pivot_cols, ech.rows)
    if any(reduced[:width]):
        return None
    scale = reduced[width + m]
    if scale == 0:
        return None
    return [Fraction(-reduced[width + i], scale) for i in range(m)]
