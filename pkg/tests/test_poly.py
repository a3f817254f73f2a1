"""Polynomial core: grammar, monomial enumeration, substitution, derivatives."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpsurf.errors import InvalidInput
from wpsurf.poly import (
    WPolynomial,
    amplitude,
    enumerate_monomials,
    format_poly,
    monomial,
    parse_poly,
    partial_derivative,
    singular_strata,
    substitute,
    symbol,
    weights,
)

W_SYSTEMS = [(1, 2, 3, 7), (1, 2, 3, 5), (1, 2, 5, 7), (1, 2, 7, 11)]


def _count_oracle(wts, k):
    """Independent count of exponent vectors with weighted degree k."""
    if not wts:
        return 1 if k == 0 else 0
    a, rest = wts[0], wts[1:]
    return sum(_count_oracle(rest, k - a * e) for e in range(k // a + 1))


@pytest.mark.parametrize("wts", W_SYSTEMS)
@pytest.mark.parametrize("k", [0, 1, 2, 3, 5, 8, 13, 21, 30])
def test_enumeration_matches_knapsack_oracle(wts, k):
    w = weights(*wts)
    exps = enumerate_monomials(w, k)
    assert len(exps) == _count_oracle(wts, k)
    assert len(set(exps)) == len(exps)
    for e in exps:
        assert sum(a * x for a, x in zip(wts, e)) == k


coeff_st = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
).filter(lambda c: c != 0)


@st.composite
def homogeneous_polys(draw, wts=(1, 2, 3, 7), degree=14):
    w = weights(*wts)
    pool = enumerate_monomials(w, degree)
    chosen = draw(
        st.lists(st.sampled_from(pool), min_size=1, max_size=8, unique=True)
    )
    cs = draw(
        st.lists(coeff_st, min_size=len(chosen), max_size=len(chosen))
    )
    return WPolynomial(w, dict(zip(chosen, cs)))


@given(F=homogeneous_polys())
@settings(max_examples=60, deadline=None)
def test_parse_format_round_trip(F):
    assert parse_poly(format_poly(F), F.weights) == F


@given(F=homogeneous_polys())
@settings(max_examples=40, deadline=None)
def test_weighted_euler_identity(F):
    d = F.degree()
    lhs = WPolynomial(F.weights)
    for j, a in enumerate(F.weights):
        xj = monomial(F.weights, tuple(1 if i == j else 0 for i in range(4)))
        lhs = lhs + a * (xj * partial_derivative(F, j))
    assert lhs == d * F


@given(F=homogeneous_polys(), G=homogeneous_polys())
@settings(max_examples=25, deadline=None)
def test_substitute_is_additive_and_multiplicative(F, G):
    w = F.weights
    s = {
        0: parse_poly("x0", w),
        1: parse_poly("x1 + 3*x0^2", w),
        2: parse_poly("2*x2", w),
        3: parse_poly("x3 - x0^7", w),
    }
    assert substitute(F + G, s) == substitute(F, s) + substitute(G, s)
    assert substitute(F * G, s) == substitute(F, s) * substitute(G, s)


def test_substitute_high_power_first():
    # first occurrence of the substituted variable carries exponent >= 3
    w = weights(1, 2, 3, 7)
    F = parse_poly("x1^3", w)
    s = {1: parse_poly("x1 + x0^2", w)}
    b = parse_poly("x1 + x0^2", w)
    assert substitute(F, s) == b * b * b
    G = parse_poly("x1^3 + x1*x2^4 + x1", w)
    expanded = b * b * b + b * parse_poly("x2^4", w) + b
    assert substitute(G, s) == expanded


def test_parse_fractions_signs_constants():
    w = weights(1, 2, 3, 7)
    F = parse_poly("1/2*x0^2 - 3*x0*x1 + 2", w)
    assert F.coefficient((2, 0, 0, 0)) == Fraction(1, 2)
    assert F.coefficient((1, 1, 0, 0)) == Fraction(-3)
    assert F.coefficient((0, 0, 0, 0)) == Fraction(2)
    assert parse_poly("-x3^2 + x3^2", w) == WPolynomial(w)


@pytest.mark.parametrize("bad", ["x0^^2", "y1 + x0", "x0**2", "x9", "3//2*x0", "+"])
def test_parse_rejects_malformed_text(bad):
    with pytest.raises(InvalidInput):
        parse_poly(bad, weights(1, 2, 3, 7))


def test_format_is_deterministic_and_canonical():
    w = weights(1, 2, 7, 11)
    F = parse_poly("x1^11 + x3^2 + x0*x2^3 + x0^22", w)
    G = parse_poly("x0^22 + x0*x2^3 + x3^2 + x1^11", w)
    assert format_poly(F) == format_poly(G)
    assert format_poly(F) == format_poly(parse_poly(format_poly(F), w))


def test_symbol_and_amplitude():
    s = symbol(14, [1, 2, 3, 7])
    assert s.degree == 14 and tuple(s.weights) == (1, 2, 3, 7)
    assert amplitude(s) == 1
    assert amplitude(symbol(9, [1, 1, 3, 4])) == 0
    assert str(s) == "(14,[1,2,3,7])"


def test_singular_strata_lists_nontrivial_stabilizer_points():
    assert singular_strata(weights(1, 2, 3, 7)) == [((1,), 2), ((2,), 3), ((3,), 7)]
    assert singular_strata(weights(1, 2, 5, 7)) == [((1,), 2), ((2,), 5), ((3,), 7)]


def test_partial_derivative_product_of_powers():
    w = weights(1, 2, 3, 7)
    F = parse_poly("x1*x2^4", w)
    assert partial_derivative(F, 2) == parse_poly("4*x1*x2^3", w)
    assert partial_derivative(F, 3) == WPolynomial(w)


def test_degree_rejects_or_flags_inhomogeneous():
    w = weights(1, 2, 3, 7)
    F = parse_poly("x0^2 + x2", w)
    with pytest.raises(InvalidInput):
        F.degree()
    assert not F.is_homogeneous()
    assert parse_poly("x0^2 + x1", w).degree() == 2
    with pytest.raises(InvalidInput):
        WPolynomial(w).degree()
