"""Quotient singularities, Hirzebruch-Jung chains, surface invariants."""

from fractions import Fraction
from math import gcd

import pytest

from wpsurf.errors import InvalidInput, NotQuasismooth
from wpsurf.poly import parse_poly, symbol, weights
from wpsurf.resolution import (
    detect_singularities,
    discrepancy,
    hj_chain,
    invariant_report,
)


def _reevaluate(entries):
    """Continued-fraction value e1 - 1/(e2 - 1/(...)) as a Fraction."""
    val = Fraction(entries[-1])
    for e in reversed(entries[:-1]):
        val = e - 1 / val
    return val


@pytest.mark.parametrize(
    "h,q,chain",
    [(3, 1, (3,)), (5, 3, (2, 3)), (5, 1, (5,)), (7, 5, (2, 2, 3)),
     (7, 2, (4, 2)), (4, 3, (2, 2, 2)), (2, 1, (2,)), (11, 7, (2, 3, 2, 2))],
)
def test_hj_chain_known_expansions(h, q, chain):
    assert tuple(hj_chain(h, q).entries) == chain


def test_hj_round_trip_up_to_200():
    for h in range(2, 201):
        for q in range(1, h):
            if gcd(h, q) != 1:
                continue
            entries = hj_chain(h, q).entries
            assert all(e >= 2 for e in entries)
            assert _reevaluate(entries) == Fraction(h, q)


def test_hj_rejects_bad_input():
    with pytest.raises(InvalidInput):
        hj_chain(6, 2)
    with pytest.raises(InvalidInput):
        hj_chain(3, 3)
    with pytest.raises(InvalidInput):
        hj_chain(1, 0)


@pytest.mark.parametrize(
    "chain,coeffs,total",
    [
        ((3,), ("-1/3",), "-1/3"),
        ((2, 3), ("-1/5", "-2/5"), "-2/5"),
        ((5,), ("-3/5",), "-9/5"),
        ((2, 2, 3), ("-1/7", "-2/7", "-3/7"), "-3/7"),
        ((4, 2), ("-4/7", "-2/7"), "-8/7"),
        ((2, 2, 2), ("0", "0", "0"), "0"),
    ],
)
def test_discrepancies_and_delta_squared(chain, coeffs, total):
    got, delta2 = discrepancy(hj_chain_from_entries(chain))
    assert tuple(str(x) for x in got) == coeffs
    assert str(delta2) == total


def hj_chain_from_entries(entries):
    """Recover (h,q) from the chain by re-evaluating, then rebuild."""
    val = _reevaluate(entries)
    return hj_chain(val.numerator, val.denominator)


SINGULARITIES = {
    "a": ["1/3(1,1) at P2"],
    "b": ["1/5(1,3) at P3"],
    "c": ["1/5(1,1) at P2", "1/7(1,5) at P3"],
    "d": ["1/7(1,2) at P2"],
}


@pytest.mark.parametrize("case", sorted(SINGULARITIES))
def test_detected_singularities(records, case):
    found = detect_singularities(records[case].basic_polynomial)
    assert [str(s) for s in found] == SINGULARITIES[case]


INVARIANTS = {
    # case: (e(X), e(resolved), chi, K^2, chains)
    "a": (23, 24, 2, "0", [(3,)]),
    "b": (22, 24, 2, "0", [(2, 3)]),
    "c": (22, 26, 2, "-2", [(5,), (2, 2, 3)]),
    "d": (23, 25, 2, "-1", [(4, 2)]),
}


@pytest.mark.parametrize("case", sorted(INVARIANTS))
def test_invariant_report_rows(records, case):
    ex, eres, chi, k2, chains = INVARIANTS[case]
    inv = invariant_report(records[case].symbol, records[case].basic_polynomial)
    assert inv.euler_x == ex
    assert inv.euler_resolved == eres
    assert inv.chi == chi
    assert str(inv.k_squared) == k2
    assert [tuple(c.entries) for c in inv.chains] == chains
    assert inv.k_squared + inv.euler_resolved == 12 * inv.chi
    assert tuple(inv.hodge) == (1, 18, 1) if case in "ad" else (1, 17, 1)


def test_case_c_k_squared_decomposition(records):
    inv = invariant_report(records["c"].symbol, records["c"].basic_polynomial)
    assert inv.o1_squared == Fraction(8, 35)
    assert tuple(inv.delta_squares) == (Fraction(-9, 5), Fraction(-3, 7))
    assert inv.k_squared == Fraction(8, 35) + Fraction(-9, 5) + Fraction(-3, 7)
    assert inv.k_squared == -2


def test_case_d_chain_orientation_convention(records):
    # the (7,2) chain is [4,2]; its reversal [2,4] is the (7,4) chain, the
    # same cyclic singularity seen from the other end
    assert tuple(hj_chain(7, 2).entries) == (4, 2)
    assert tuple(hj_chain(7, 4).entries) == (2, 4)


def test_invariant_report_rejects_non_quasismooth():
    w = weights(1, 2, 3, 7)
    with pytest.raises(NotQuasismooth):
        invariant_report(symbol(14, [1, 2, 3, 7]), parse_poly("x0^14 + x1^7", w))


def test_generic_members_have_same_singularities(records):
    for case, rec in records.items():
        got = [str(s) for s in detect_singularities(rec.generic_polynomial)]
        assert got == SINGULARITIES[case], case
