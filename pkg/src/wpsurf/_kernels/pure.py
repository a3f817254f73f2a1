"""Pure-Python exact integer elimination kernel.

Rows are plain lists of Python ints (arbitrary precision).  The two hot
primitives — gcd normalization and cross-multiplication reduction of a row
against an echelon — live here so a compiled twin can replace them.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure"


def normalize(row: list) -> list:
    """Divide ``row`` in place by the gcd of its entries (no-op on zero rows)."""
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for i, v in enumerate(row):
            row[i] = v // g
    return row


def reduce_against(row: list, pivot_cols: list, pivot_rows: list) -> list:
    """Eliminate ``row`` (in place) against echelon rows via cross-multiplication.

    ``pivot_cols`` must be ascending and each ``pivot_rows[k]`` must be zero
    strictly left of ``pivot_cols[k]`` with a positive pivot entry.  The row is
    gcd-normalized after each elimination to control entry growth.  Entries
    past ``len(pivot_rows[k])`` (augmented columns) are scaled consistently.
    """
    n = len(row)
    for k in range(len(pivot_cols)):
        c = pivot_cols[k]
        v = row[c]
        if v:
            prow = pivot_rows[k]
            p = prow[c]
            m = len(prow)
            for i in range(n):
                row[i] = p * row[i] - v * prow[i] if i < m else p * row[i]
            normalize(row)
    return row
