# cython: language_level=3
"""Compiled twin of the pure-Python elimination kernel.

Entries stay arbitrary-precision Python ints; the win over the pure version
is C-level loop and indexing overhead in the two hot primitives.
"""

from math import gcd as _gcd

BACKEND = "c"


def normalize(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        v = row[i]
        if v:
            g = _gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for i in range(n):
            row[i] = row[i] // g
    return row


def reduce_against(list row, list pivot_cols, list pivot_rows):
    cdef Py_ssize_t i, k, c, n = len(row), m
    cdef list prow
    for k in range(len(pivot_cols)):
        c = pivot_cols[k]
        v = row[c]
        if v:
            prow = pivot_rows[k]
            p = prow[c]
            m = len(prow)
            for i in range(n):
                if i < m:
                    row[i] = p * row[i] - v * prow[i]
                else:
                    row[i] = p * row[i]
            normalize(row)
    return row
