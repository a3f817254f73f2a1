"""Curated per-family records: symbols, members, lattices, fibers."""

import pytest

from wpsurf.errors import InvalidInput
from wpsurf.families import (
    CASES,
    all_family_records,
    case_c_rejected_transcendental,
    family_record,
)
from wpsurf.lattice import signature
from wpsurf.quasismooth import cycle_decomposition

SYMBOLS = {
    "a": (14, (1, 2, 3, 7)),
    "b": (12, (1, 2, 3, 5)),
    "c": (16, (1, 2, 5, 7)),
    "d": (22, (1, 2, 7, 11)),
}


def test_cases_are_the_four_families():
    assert CASES == ("a", "b", "c", "d")
    assert [r.case for r in all_family_records()] == list(CASES)


@pytest.mark.parametrize("case", sorted(SYMBOLS))
def test_record_symbols_and_members(case):
    rec = family_record(case)
    d, wts = SYMBOLS[case]
    assert rec.symbol.degree == d and tuple(rec.symbol.weights) == wts
    assert rec.basic_polynomial == cycle_decomposition(rec.symbol).basic_polynomial
    assert rec.basic_polynomial.degree() == d
    assert rec.generic_polynomial.degree() == d


@pytest.mark.parametrize("case", sorted(SYMBOLS))
def test_lattice_ranks_sum_to_22(case):
    rec = family_record(case)
    assert rec.picard_gram.rank + rec.transcendental_gram.rank == 22
    sp = signature(rec.picard_gram)
    st = signature(rec.transcendental_gram)
    assert (sp[0] + st[0], sp[1] + st[1]) == (3, 19)
    assert rec.transcendental_gram.even


def test_transcendental_labels():
    assert family_record("a").transcendental_label == "U + U + E8(-1) + E8(-1)"
    assert family_record("b").transcendental_label == "<2> + U + E8(-1) + E8(-1)"
    assert family_record("c").transcendental_label == "A2 + E8(-1) + E8(-1)"
    assert family_record("d").transcendental_label == "U + U + E8(-1) + E8(-1)"


def test_rejected_case_c_candidate_shape():
    L = case_c_rejected_transcendental()
    assert L.rank == 14
    assert signature(L) == (2, 12)


def test_multiple_fibers_only_in_the_double_cover_elliptic_cases():
    assert family_record("a").multiple_fibers == (2,)
    assert family_record("b").multiple_fibers == (2,)
    assert family_record("c").multiple_fibers == ()
    assert family_record("d").multiple_fibers == ()


def test_fiber_configuration_strings():
    fibers_a = [str(f) for f in family_record("a").fiber_configuration]
    assert fibers_a[0] == "2xI0"
    assert fibers_a.count("I1") == 24
    fibers_c = [str(f) for f in family_record("c").fiber_configuration]
    assert fibers_c[:2] == ["I3", "II"] and fibers_c.count("I1") == 19
    fibers_d = [str(f) for f in family_record("d").fiber_configuration]
    assert fibers_d == ["I1"] * 24


def test_unknown_case_raises():
    with pytest.raises(InvalidInput):
        family_record("z")


def test_records_are_cached():
    assert family_record("a") is family_record("a")
