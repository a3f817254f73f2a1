"""Hodge vectors, moduli counts, and the closed-form Poincare series."""

from fractions import Fraction

import pytest
import sympy

from wpsurf.errors import InvalidInput
from wpsurf.hodge import (
    HodgeVector,
    hodge_numbers,
    milnor_number,
    moduli_count,
    poincare_series,
)
from wpsurf.poly import symbol

# (degree, weights) -> expected hodge vector, expected moduli count
TABLE = [
    ((14, (1, 2, 3, 7)), (1, 18, 1), 18),
    ((12, (1, 2, 3, 5)), (1, 17, 1), 17),
    ((16, (1, 2, 5, 7)), (1, 17, 1), 16),
    ((22, (1, 2, 7, 11)), (1, 18, 1), 18),
    ((9, (1, 1, 3, 4)), (1, 16, 1), 16),
    ((12, (1, 1, 4, 6)), (1, 18, 1), 18),
]


def _sympy_series_oracle(d, wts, upto):
    """Coefficients of prod (1-t^(d-a))/(1-t^a), by exact division in Z[t]."""
    t = sympy.symbols("t")
    num = sympy.Poly(sympy.prod([1 - t ** (d - a) for a in wts]), t)
    den = sympy.Poly(sympy.prod([1 - t**a for a in wts]), t)
    quo, rem = sympy.div(num, den, t)
    assert rem.is_zero, "series of a quasi-smooth symbol must be a polynomial"
    quo = sympy.Poly(quo, t)
    return [int(quo.coeff_monomial(t**k)) for k in range(upto + 1)]


@pytest.mark.parametrize("row", TABLE, ids=lambda r: str(r[0]))
def test_hodge_vector_and_moduli_table(row):
    (d, wts), hv, mu = row
    sym = symbol(d, list(wts))
    assert tuple(hodge_numbers(sym)) == hv
    assert moduli_count(sym) == mu


@pytest.mark.parametrize("row", TABLE, ids=lambda r: str(r[0]))
def test_series_matches_sympy_expansion(row):
    (d, wts), _, _ = row
    sym = symbol(d, list(wts))
    ps = poincare_series(sym)
    assert ps.is_polynomial
    T = ps.socle_bound
    assert T == sum(d - 2 * a for a in wts)
    oracle = _sympy_series_oracle(d, wts, T)
    assert list(ps.coefficients) == oracle
    assert ps.mu(T + 1) == 0 and ps.mu(-1) == 0


@pytest.mark.parametrize("row", TABLE, ids=lambda r: str(r[0]))
def test_series_duality_and_total_sum(row):
    (d, wts), _, _ = row
    ps = poincare_series(symbol(d, list(wts)))
    T = ps.socle_bound
    for k in range(T + 1):
        assert ps.mu(k) == ps.mu(T - k)
    total = sum(ps.coefficients)
    expect = 1
    for a in wts:
        expect *= Fraction(d - a, a)
    assert expect.denominator == 1 and total == expect


def test_milnor_number_closed_form():
    mu = milnor_number([Fraction(a, 14) for a in (1, 2, 3, 7)])
    assert mu == Fraction(13 * 12 * 11 * 7, 1 * 2 * 3 * 7) == 286
    with pytest.raises(InvalidInput):
        milnor_number([Fraction(2)])


def test_hodge_vector_is_iterable_and_indexed():
    hv = hodge_numbers(symbol(14, [1, 2, 3, 7]))
    assert isinstance(hv, HodgeVector)
    assert list(hv) == [1, 18, 1]


def test_degenerate_symbol_rejected():
    with pytest.raises(InvalidInput):
        poincare_series(symbol(2, [1, 2, 3, 7]))
