"""Curated records for the four amplitude-one families.

The classification produces exactly four weight systems ``P(1,2,a,b)`` with
``amplitude d - 1 - 2 - a - b = 1`` that carry quasi-smooth hypersurfaces not
touching the singular locus in excess: (a) degree 14 in P(1,2,3,7),
(b) 12 in P(1,2,3,5), (c) 16 in P(1,2,5,7), (d) 22 in P(1,2,7,11).

Each :class:`FamilyRecord` bundles the data the report layer consumes:

* the family symbol and its basic (cycle-decomposition) member,
* a deterministic generic reference member — for (a), (b) the all-ones
  normal-form template member, for (c), (d) fixed sparse generic members
  whose Jacobian-ring invariants serve as reference computations,
* the elliptic-fibration fiber configuration on the minimal model and the
  multiple-fiber multiplicities,
* the Picard lattice of the (very) generic minimal model and a certified
  Gram matrix for the transcendental lattice.

Case (c) additionally carries a rank-14 *rejected* transcendental candidate
(:func:`case_c_rejected_transcendental`); its rank is incompatible with the
Picard rank on a surface with b2 = 19 + 3 = 22, so the orthogonal-complement
rank check must fail on it.  The certified case-(c) lattice is the rank-18
``A2 + E8(-1) + E8(-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .lattice import (
    FiberType,
    GramLattice,
    direct_sum,
    hyperbolic_U,
    picard_from_configuration,
    root,
    scale,
    unit,
)
from .normalform import case_symbol, normal_form_template
from .poly import FamilySymbol, WPolynomial, parse_poly
from .quasismooth import cycle_decomposition

CASES: tuple[str, ...] = ("a", "b", "c", "d")

_GENERIC_TEXT = {
    "c": "x0^16 + x1^8 + x0*x2^3 + x1*x3^2 + x1^3*x2^2",
    "d": "x3^2 + x0*x2^3 + x1^4*x2^2 + x0^20*x1 + x1^11",
}


def _all_ones_member(case: str) -> WPolynomial:
    """Template member with every pinned unit in place and every free
    coefficient set to 1."""
    tpl = normal_form_template(case)
    terms = {exp: c for exp, c in tpl.pinned}
    for exp in tpl.free:
        terms[exp] = 1
    return WPolynomial(tpl.symbol.weights, terms)


def _generic_member(case: str) -> WPolynomial:
    if case in _GENERIC_TEXT:
        return parse_poly(_GENERIC_TEXT[case], case_symbol(case).weights)
    return _all_ones_member(case)


def _e8m() -> GramLattice:
    return scale(root("E", 8), -1)


def _transcendental(case: str) -> GramLattice:
    if case in ("a", "d"):
        return direct_sum(hyperbolic_U(), hyperbolic_U(), _e8m(), _e8m())
    if case == "b":
        return direct_sum(unit(2), hyperbolic_U(), _e8m(), _e8m())
    return direct_sum(root("A", 2), _e8m(), _e8m())


_TRANSCENDENTAL_LABELS = {
    "a": "U + U + E8(-1) + E8(-1)",
    "b": "<2> + U + E8(-1) + E8(-1)",
    "c": "A2 + E8(-1) + E8(-1)",
    "d": "U + U + E8(-1) + E8(-1)",
}

CASE_C_REJECTED_LABEL = "U + U + E8(-1) + A2(-1)"


def case_c_rejected_transcendental() -> GramLattice:
    """The rank-14 candidate ``U + U + E8(-1) + A2(-1)`` for case (c).

    With Picard rank 4 and b2 = 22 the transcendental lattice must have rank
    18, so :func:`wpsurf.lattice.verify_transcendental` rejects this candidate
    at the rank check.  Kept as a named constant so the reproduce suite can
    demonstrate the rejection.
    """
    return direct_sum(
        hyperbolic_U(), hyperbolic_U(), _e8m(), scale(root("A", 2), -1)
    )


def _i1s(n: int) -> tuple[FiberType, ...]:
    return tuple(FiberType("I", 1) for _ in range(n))


def _fibers(case: str) -> tuple[FiberType, ...]:
    if case == "a":
        return (FiberType("I", 0, multiplicity=2),) + _i1s(24)
    if case == "b":
        return (FiberType("I", 0, multiplicity=2), FiberType("I", 2)) + _i1s(22)
    if case == "c":
        return (FiberType("I", 3), FiberType("II")) + _i1s(19)
    return _i1s(24)


def _multiplicities(case: str) -> tuple[int, ...]:
    return tuple(
        t.multiplicity for t in _fibers(case) if t.multiplicity > 1
    )


@dataclass(frozen=True)
class FamilyRecord:
    """Immutable bundle of reference data for one family."""

    case: str
    symbol: FamilySymbol
    basic_polynomial: WPolynomial
    generic_polynomial: WPolynomial
    fiber_configuration: tuple[FiberType, ...]
    multiple_fibers: tuple[int, ...]
    picard_gram: GramLattice
    transcendental_gram: GramLattice
    transcendental_label: str

    def __post_init__(self) -> None:
        assert self.picard_gram.rank + self.transcendental_gram.rank == 22


def _build(case: str) -> FamilyRecord:
    sym = case_symbol(case)
    return FamilyRecord(
        case=case,
        symbol=sym,
        basic_polynomial=cycle_decomposition(sym).basic_polynomial,
        generic_polynomial=_generic_member(case),
        fiber_configuration=_fibers(case),
        multiple_fibers=_multiplicities(case),
        picard_gram=picard_from_configuration(case),
        transcendental_gram=_transcendental(case),
        transcendental_label=_TRANSCENDENTAL_LABELS[case],
    )


_RECORDS: dict[str, FamilyRecord] = {}


def family_record(case: str) -> FamilyRecord:
    """The curated record for family ``case`` in {a, b, c, d}."""
    if case not in CASES:
        raise InvalidInput(f"unknown family case {case!r}; expected one of a, b, c, d")
    if case not in _RECORDS:
        _RECORDS[case] = _build(case)
    return _RECORDS[case]


def all_family_records() -> tuple[FamilyRecord, ...]:
    return tuple(family_record(c) for c in CASES)
