"""Census of amplitude-one symbols, cycle decompositions, certificates."""

import pytest

from wpsurf.errors import InvalidInput
from wpsurf.poly import amplitude, format_poly, parse_poly, symbol, weights
from wpsurf.quasismooth import (
    cycle_decomposition,
    division_witness_check,
    enumerate_amplitude_one,
    is_quasismooth,
    subset_smoothness_advisory,
)

FOUR = [
    (12, (1, 2, 3, 5)),
    (14, (1, 2, 3, 7)),
    (16, (1, 2, 5, 7)),
    (22, (1, 2, 7, 11)),
]


@pytest.fixture(scope="module")
def census():
    return enumerate_amplitude_one(101)


def test_census_returns_exactly_the_four_families(census):
    assert [(s.degree, tuple(s.weights)) for s in census] == FOUR
    for s in census:
        assert amplitude(s) == 1


def test_census_is_monotone_in_the_bound(census):
    assert [(s.degree, tuple(s.weights)) for s in enumerate_amplitude_one(6)] == [
        (12, (1, 2, 3, 5))
    ]
    assert enumerate_amplitude_one(11) == census


def test_cycle_decomposition_reproduces_basic_members(records):
    for rec in records.values():
        cd = cycle_decomposition(rec.symbol)
        assert cd.basic_polynomial == rec.basic_polynomial


def test_cycle_decomposition_case_a_structure():
    cd = cycle_decomposition(symbol(14, [1, 2, 3, 7]))
    assert cd.cycles == ((3, 2), (1,), (7,))
    assert format_poly(cd.basic_polynomial) == "x0^14+x1^7+x1*x2^4+x3^2"


def test_cycle_decomposition_rejects_repeated_weights():
    with pytest.raises(InvalidInput):
        cycle_decomposition(symbol(9, [1, 1, 3, 4]))


def test_division_witnesses_exist_for_all_four(records):
    for rec in records.values():
        dw = division_witness_check(rec.symbol)
        assert dw.ok and dw.violating is None


def test_basic_members_are_quasismooth(records):
    for rec in records.values():
        cert = is_quasismooth(rec.basic_polynomial)
        assert cert.verdict, rec.case
        assert cert.failing_degree is None
        assert cert.total_dimension is not None and cert.total_dimension > 0


@pytest.mark.parametrize("case", ["a", "c", "d"])
def test_generic_members_are_quasismooth(records, case):
    # case (b)'s generic member is dense (every degree-12 monomial) and an
    # order of magnitude slower; it is certified in the family-report tests
    cert = is_quasismooth(records[case].generic_polynomial)
    assert cert.verdict and cert.failing_degree is None


def test_case_a_certificate_details(records):
    cert = is_quasismooth(records["a"].basic_polynomial)
    assert cert.socle_bound == 30
    assert tuple(cert.window) == (31, 37)
    assert cert.total_dimension == 286
    assert all(v == 0 for v in cert.window_dimensions)


def test_non_quasismooth_member_is_rejected():
    w = weights(1, 2, 3, 7)
    cert = is_quasismooth(parse_poly("x0^14 + x1^7", w))
    assert not cert.verdict
    assert cert.failing_degree == 31
    assert cert.total_dimension is None


def test_zero_polynomial_is_invalid():
    from wpsurf.poly import WPolynomial

    with pytest.raises(InvalidInput):
        is_quasismooth(WPolynomial(weights(1, 2, 3, 7)))


def test_subset_advisory_loose_holds_for_basic_member(records):
    adv = subset_smoothness_advisory(records["a"].basic_polynomial)
    assert adv.loose_ok
    assert adv.failing_subsets_loose == ()
