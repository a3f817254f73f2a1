"""Normal-form templates, reduction pipelines, torus equivalence, moduli."""

import random
from fractions import Fraction

import pytest

from wpsurf.errors import InvalidInput, NotReducible, RootRequired
from wpsurf.hodge import moduli_count
from wpsurf.normalform import (
    TorusElement,
    case_symbol,
    is_normal_form,
    normal_form_moduli_dim,
    normal_form_template,
    random_normal_form,
    random_torus_element,
    reduce_to_normal_form,
    scalar_field,
    torus_equivalent,
)
from wpsurf.poly import WPolynomial, parse_poly, substitute, weights

MODULI = {"a": 18, "b": 17, "c": 16, "d": 18}


# --- templates ----------------------------------------------------------------


@pytest.mark.parametrize("case", sorted(MODULI))
def test_template_counts_give_the_moduli_dimension(case):
    t = normal_form_template(case)
    assert normal_form_moduli_dim(case) == MODULI[case]
    assert len(t.free) - t.torus_dim == MODULI[case]
    assert t.symbol == case_symbol(case)


@pytest.mark.parametrize("case", sorted(MODULI))
def test_moduli_dimension_agrees_with_hodge_module(case):
    assert normal_form_moduli_dim(case) == moduli_count(case_symbol(case))


def test_template_pins_and_constraints():
    ta = normal_form_template("a")
    assert ((0, 1, 4, 0), Fraction(1)) in ta.pinned
    assert ((0, 0, 0, 2), Fraction(-1)) in ta.pinned
    td = normal_form_template("d")
    assert ((1, 0, 3, 0), Fraction(1)) in td.pinned
    assert (0, 4, 2, 0) in td.nonzero
    tc = normal_form_template("c")
    assert (1, 0, 3, 0) in tc.nonzero  # x0*x2^3 coefficient non-zero


def test_case_symbol_matches_family_records(records):
    for case, rec in records.items():
        assert case_symbol(case) == rec.symbol


# --- is_normal_form -------------------------------------------------------------


def test_basic_member_b_is_already_normal(records):
    chk = is_normal_form(records["b"].basic_polynomial, "b")
    assert chk.ok and chk.violations == ()


def test_basic_member_a_violates_the_x3_pin(records):
    chk = is_normal_form(records["a"].basic_polynomial, "a")
    assert not chk.ok
    assert any("x3^2" in v for v in chk.violations)


def test_forbidden_monomial_is_reported():
    w = weights(1, 2, 7, 11)
    F = parse_poly("x0*x2^3 + x1^4*x2^2 + x1^11 + x0^22 - x3^2", w)
    chk = is_normal_form(F, "d")
    assert not chk.ok
    assert any("x0^22" in v for v in chk.violations)


def test_unknown_case_rejected():
    with pytest.raises(InvalidInput):
        normal_form_template("e")


# --- reduction pipelines --------------------------------------------------------


def test_already_normal_input_returns_identity(records):
    F = records["b"].basic_polynomial
    G, t = reduce_to_normal_form(F, "b")
    assert G == F and t.is_identity


def test_case_a_absorption_of_x2_quartic_dirt(records):
    w = weights(1, 2, 3, 7)
    F = records["a"].basic_polynomial + parse_poly("1/3*x0^2*x2^4", w)
    G, t = reduce_to_normal_form(F, "a")
    assert is_normal_form(G, "a").ok
    assert G.coefficient((2, 0, 4, 0)) == 0
    assert t.apply(F) == G


def test_case_d_exact_shift_consumes_lambda_two():
    w = weights(1, 2, 7, 11)
    F = parse_poly(
        "x0*x2^3 + 6*x0^8*x2^2 - 16*x0^22 + x1^4*x2^2 + x1^11 - x3^2", w
    )
    G, t = reduce_to_normal_form(F, "d")
    assert is_normal_form(G, "d").ok
    assert G.coefficient((22, 0, 0, 0)) == 0
    assert t.assignments[2] == parse_poly("x2 - 2*x0^7", w)
    assert t.apply(F) == G


def test_case_d_irrational_root_raises_then_float_succeeds():
    w = weights(1, 2, 7, 11)
    F = parse_poly("7*x0^22 + x0*x2^3 + x1^4*x2^2 + x1^11 + x3^2", w)
    with pytest.raises(RootRequired) as exc:
        reduce_to_normal_form(F, "d")
    assert exc.value.value == -7  # coefficient after the sign normalization
    G, t = reduce_to_normal_form(F, "d", scalar_field("float", 40))
    assert abs(G.coefficient((22, 0, 0, 0))) < 1e-20
    assert t.backend == "float"
    assert abs(t.residual) < 1e-18


def test_scalar_field_names_validated():
    assert scalar_field("exact").exact
    assert not scalar_field("float", 30).exact
    with pytest.raises(InvalidInput):
        scalar_field("symbolic")


def test_unpinnable_input_is_not_reducible():
    w = weights(1, 2, 3, 7)
    with pytest.raises(NotReducible):
        reduce_to_normal_form(parse_poly("x0^14 + x1^7 + x1*x2^4", w), "a")


# --- faithfulness and round trips ------------------------------------------------


@pytest.mark.parametrize("case", sorted(MODULI))
def test_reduction_faithfulness_on_random_translates(case, rng):
    for _ in range(10):
        F = random_normal_form(case, rng)
        t = random_torus_element(case, rng)
        moved = t.apply(F)
        G, transform = reduce_to_normal_form(moved, case)
        assert is_normal_form(G, case).ok
        assert transform.apply(moved) == G
        # faithfulness spelled out: coordinate substitution then global scale
        img = substitute(moved, dict(enumerate(transform.assignments)))
        assert transform.scale * img == G
        sol = torus_equivalent(G, F, case)
        assert sol is not None


def test_torus_elements_preserve_normal_forms(rng):
    for case in sorted(MODULI):
        F = random_normal_form(case, rng)
        assert is_normal_form(F, case).ok
        t = random_torus_element(case, rng)
        assert is_normal_form(t.apply(F), case).ok


def test_generic_stabilizer_is_trivial(rng):
    F = random_normal_form("c", rng)
    t = torus_equivalent(F, F, "c")
    assert t is not None
    assert t.apply(F) == F


def test_support_mismatch_means_inequivalent(rng):
    case = "d"
    F = random_normal_form(case, rng)
    t = normal_form_template(case)
    droppable = next(
        e for e in sorted(t.free) if e not in t.nonzero and F.coefficient(e) != 0
    )
    G = WPolynomial(F.weights, {e: c for e, c in F.terms.items() if e != droppable})
    assert is_normal_form(G, case).ok
    assert torus_equivalent(F, G, case) is None
    assert torus_equivalent(G, F, case) is None


def test_torus_equivalent_requires_normal_forms(records):
    F = records["a"].basic_polynomial  # +x3^2 violates the pin
    with pytest.raises(InvalidInput):
        torus_equivalent(F, F, "a")


def test_torus_element_validation():
    with pytest.raises(InvalidInput):
        TorusElement("a", (1, 1, 1))  # wrong arity
    with pytest.raises(InvalidInput):
        TorusElement("a", (0, 1, 1, 1))  # zero scalar
    with pytest.raises(InvalidInput):
        # does not preserve the pinned x1*x2^4 coefficient
        TorusElement("a", (1, 2, 1, 1))
    t = TorusElement.identity("b")
    assert t.c == (1, 1, 1, 1)


def test_random_normal_forms_satisfy_nonzero_constraints(rng):
    for case in sorted(MODULI):
        t = normal_form_template(case)
        F = random_normal_form(case, rng)
        for e in t.nonzero:
            assert F.coefficient(e) != 0
        for e, v in t.pinned:
            assert F.coefficient(e) == v
