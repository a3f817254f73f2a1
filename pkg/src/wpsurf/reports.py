"""Family reports and the one-shot reproduction suite.

:func:`report_family` assembles every computed invariant of one family into a
deterministic :class:`FamilyReport` (text or JSON).  :func:`reproduce_paper`
re-derives the full catalogue of published reference values — classification,
Hodge/moduli table, Jacobian-ring tables, singularity resolutions, lattice
identifications, fibration data, normal-form counts and the property suites —
and emits an expected/actual/status table.

Published values that carry documented transcription errors are kept verbatim
on the ``expected`` side; such a row counts as passing exactly when the
computed value matches the documented correction, and the row carries the
reconciling annotation.  Every rational number serializes as a decimal-free
``p/q`` string.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Callable

from .errors import InvalidInput, WpsurfError
from .families import (
    CASES,
    CASE_C_REJECTED_LABEL,
    FamilyRecord,
    case_c_rejected_transcendental,
    family_record,
)
from .hodge import hodge_numbers, moduli_count, poincare_series
from .jacobian import graded_piece, torelli_test
from .lattice import (
    disc_form_isomorphic,
    discriminant_form,
    dynkin_graph_lattice,
    fiber_config_euler,
    from_gram,
    genus_equal,
    genus_fingerprint,
    invariant_factors,
    kodaira_dimension,
    root,
    scale,
    unit,
    verify_transcendental,
)
from .normalform import (
    normal_form_moduli_dim,
    random_normal_form,
    random_torus_element,
    reduce_to_normal_form,
    torus_equivalent,
)
from .poly import format_poly, symbol
from .quasismooth import enumerate_amplitude_one, is_quasismooth
from .resolution import discrepancy, hj_chain, invariant_report


class ReportStageError(WpsurfError):
    """A report pipeline stage failed; names the stage and chains the cause."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"report stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


def _frac(v) -> str:
    """Exact decimal-free serialization of a rational value."""
    return str(Fraction(v))


def _kappa(value) -> Any:
    return "-infinity" if value == float("-inf") else value


# ---------------------------------------------------------------------------
# Per-family report


@dataclass(frozen=True)
class FamilyReport:
    """Deterministic dossier of one family; all numerics exact."""

    case: str
    symbol: str
    amplitude: int
    hodge: tuple[int, ...]
    moduli: int
    basic_polynomial: str
    generic_polynomial: str
    quasi_smooth: dict
    singularities: tuple[dict, ...]
    invariants: dict
    picard_gram: tuple[tuple[int, ...], ...]
    transcendental: dict
    torelli: dict
    fibration: dict

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "symbol": self.symbol,
            "amplitude": self.amplitude,
            "hodge": list(self.hodge),
            "moduli": self.moduli,
            "basic_polynomial": self.basic_polynomial,
            "generic_polynomial": self.generic_polynomial,
            "quasi_smooth": self.quasi_smooth,
            "singularities": [dict(s) for s in self.singularities],
            "invariants": self.invariants,
            "picard_gram": [list(r) for r in self.picard_gram],
            "transcendental": self.transcendental,
            "torelli": self.torelli,
            "fibration": self.fibration,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"family ({self.case})  {self.symbol}  amplitude {self.amplitude}",
            f"  hodge vector        : {d['hodge']}",
            f"  projective moduli   : {self.moduli}",
            f"  basic member        : {self.basic_polynomial}",
            f"  generic member      : {self.generic_polynomial}",
            f"  quasi-smooth        : {self.quasi_smooth['verdict']}"
            f" (window {self.quasi_smooth['window']},"
            f" total dim {self.quasi_smooth['total_dimension']})",
        ]
        for s in self.singularities:
            lines.append(
                f"  singularity         : {s['type']} -> chain {s['chain']},"
                f" discrepancies {s['discrepancies']}, delta^2 {s['delta_squared']}"
            )
        inv = self.invariants
        lines += [
            f"  euler e(X)/e(X~)    : {inv['euler_quasismooth']} / {inv['euler_resolved']}",
            f"  K^2(X~)             : {inv['k_squared']}",
            f"  noether K^2 + e     : {inv['noether_sum']} = 12*chi ="
            f" {inv['twelve_chi']} -> {'ok' if inv['noether_holds'] else 'VIOLATED'}",
            f"  picard gram         : {d['picard_gram']}",
            f"  transcendental      : {self.transcendental['label']}"
            f" (rank {self.transcendental['rank']})",
        ]
        for chk in self.transcendental["checks"]:
            mark = "ok" if chk["passed"] else "FAIL"
            lines.append(f"    [{mark}] {chk['name']}: {chk['detail']}")
        t = self.torelli
        lines += [
            f"  torelli kernel      : basic {t['basic_dimension']}"
            f" {t['basic_generators']}, generic {t['generic_dimension']}"
            f" {t['generic_generators']}",
            f"  fibration fibers    : {self.fibration['configuration']}",
            f"  fiber euler total   : {self.fibration['euler_total']}"
            f" (target 24: {self.fibration['euler_on_target']})",
            f"  kodaira             : delta {self.fibration['kodaira']['delta']},"
            f" kappa {self.fibration['kodaira']['kappa']}",
        ]
        return "\n".join(lines) + "\n"


def _stage(name: str, fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except WpsurfError as exc:
        raise ReportStageError(name, exc) from exc


def report_family(case: str) -> FamilyReport:
    """Run the full pipeline for one family; deterministic output."""
    rec: FamilyRecord = _stage("family-record", lambda: family_record(case))
    sym = rec.symbol

    hv = _stage("hodge-numbers", lambda: hodge_numbers(sym))
    mod = _stage("moduli-count", lambda: moduli_count(sym))
    cert = _stage("quasi-smoothness", lambda: is_quasismooth(rec.basic_polynomial))
    inv = _stage(
        "singularity-resolution", lambda: invariant_report(sym, rec.basic_polynomial)
    )
    ker_b = _stage("torelli-basic", lambda: torelli_test(rec.basic_polynomial))
    ker_g = _stage("torelli-generic", lambda: torelli_test(rec.generic_polynomial))
    trans = _stage(
        "transcendental-checklist",
        lambda: verify_transcendental(rec.picard_gram, rec.transcendental_gram),
    )
    fib = _stage(
        "fiber-configuration",
        lambda: fiber_config_euler(list(rec.fiber_configuration)),
    )
    chi = 1 + hv[0]
    delta, kappa = _stage(
        "kodaira-dimension",
        lambda: kodaira_dimension(chi, 0, list(rec.multiple_fibers)),
    )

    sing_blocks = tuple(
        {
            "type": str(s),
            "order": s.order,
            "chain": list(chain.entries),
            "discrepancies": [_frac(x) for x in disc],
            "delta_squared": _frac(d2),
        }
        for s, chain, disc, d2 in zip(
            inv.singularities, inv.chains, inv.discrepancies, inv.delta_squares
        )
    )

    return FamilyReport(
        case=case,
        symbol=str(sym),
        amplitude=sym.degree - sum(sym.weights),
        hodge=tuple(hv),
        moduli=mod,
        basic_polynomial=format_poly(rec.basic_polynomial),
        generic_polynomial=format_poly(rec.generic_polynomial),
        quasi_smooth={
            "verdict": cert.verdict,
            "socle_bound": cert.socle_bound,
            "window": list(cert.window),
            "window_dimensions": list(cert.window_dimensions),
            "total_dimension": cert.total_dimension,
        },
        singularities=sing_blocks,
        invariants={
            "euler_quasismooth": inv.euler_x,
            "euler_resolved": inv.euler_resolved,
            "chi": inv.chi,
            "o1_squared": _frac(inv.o1_squared),
            "k_squared": _frac(inv.k_squared),
            "noether_sum": _frac(inv.k_squared + inv.euler_resolved),
            "twelve_chi": 12 * inv.chi,
            "noether_holds": inv.k_squared + inv.euler_resolved == 12 * inv.chi,
        },
        picard_gram=tuple(tuple(r) for r in rec.picard_gram.gram),
        transcendental={
            "label": rec.transcendental_label,
            "rank": rec.transcendental_gram.rank,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in trans.checks
            ],
            "passed": trans.passed,
        },
        torelli={
            "basic_dimension": ker_b.kernel_dimension,
            "basic_generators": [format_poly(g) for g in ker_b.kernel_basis],
            "generic_dimension": ker_g.kernel_dimension,
            "generic_generators": [format_poly(g) for g in ker_g.kernel_basis],
        },
        fibration={
            "configuration": [str(t) for t in rec.fiber_configuration],
            "euler_total": fib.total,
            "euler_on_target": fib.on_k3_target,
            "multiple_fibers": list(rec.multiple_fibers),
            "kodaira": {"delta": _frac(delta), "kappa": _kappa(kappa)},
        },
    )


# ---------------------------------------------------------------------------
# Reproduction suite: published reference values


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    expected: Any
    actual: Any
    status: str  # "pass" | "pass-with-correction" | "fail"
    annotation: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "description": self.description,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
            "annotation": self.annotation,
        }


@dataclass(frozen=True)
class ReproduceSummary:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def counts(self) -> dict:
        n = {"pass": 0, "pass-with-correction": 0, "fail": 0}
        for c in self.checks:
            n[c.status] += 1
        return n

    def to_dict(self) -> dict:
        c = self.counts
        return {
            "checks": [r.to_dict() for r in self.checks],
            "total": len(self.checks),
            "passed": c["pass"],
            "passed_with_correction": c["pass-with-correction"],
            "failed": c["fail"],
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render_text(self) -> str:
        lines = []
        width = max(len(c.check_id) for c in self.checks)
        for c in self.checks:
            tag = {"pass": "PASS", "pass-with-correction": "PASS*", "fail": "FAIL"}[
                c.status
            ]
            lines.append(f"{c.check_id:<{width}}  {tag:<5}  {c.description}")
            if c.status != "pass":
                lines.append(f"{'':<{width}}         expected: {c.expected}")
                lines.append(f"{'':<{width}}         actual  : {c.actual}")
            if c.annotation:
                lines.append(f"{'':<{width}}         note    : {c.annotation}")
        n = self.counts
        lines.append(
            f"{len(self.checks)} checks: {n['pass']} pass,"
            f" {n['pass-with-correction']} pass with documented correction,"
            f" {n['fail']} fail -> {'OK' if self.ok else 'FAILURE'}"
        )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class _Check:
    check_id: str
    description: str
    expected: Any
    compute: Callable[[], Any]
    correction: Any = None
    annotation: str = ""

    def run(self) -> CheckResult:
        actual = self.compute()
        if actual == self.expected:
            return CheckResult(
                self.check_id, self.description, self.expected, actual, "pass"
            )
        if self.correction is not None and actual == self.correction:
            return CheckResult(
                self.check_id,
                self.description,
                self.expected,
                actual,
                "pass-with-correction",
                self.annotation,
            )
        note = self.annotation or (
            "computed value matches neither the published value nor a"
            " documented correction"
        )
        return CheckResult(
            self.check_id, self.description, self.expected, actual, "fail", note
        )


# --- published quotient-basis tables (verbatim, typos included) -------------

_A14_PUBLISHED = (
    "(12,1,0)", "(11,0,1)", "(10,2,0)", "(9,1,1)", "(8,3,0)", "(8,0,2)",
    "(7,2,1)", "(6,4,0)", "(6,1,2)", "(5,3,1)", "(5,0,3)", "(4,2,2)",
    "(4,5,0)", "(3,4,1)", "(2,3,2)", "(2,0,4)=(2,6,0)", "(1,5,1)", "(0,4,2)",
)
_A15_PUBLISHED = (
    "(12,0,1)", "(11,2,0)", "(10,1,1)", "(9,3,0)", "(9,0,2)", "(8,2,1)",
    "(7,4,2)", "(7,1,2)", "(6,3,1)", "(6,0,3)", "(5,2,2)", "(5,5,0)",
    "(4,4,1)", "(3,3,2)", "(3,0,4)=(3,6,0)", "(2,5,1)", "(1,4,2)",
    "(0,0,5)=(0,6,1)",
)
_B12_PUBLISHED = (
    "(10,1,0,0)", "(8,2,0,0)", "(6,3,0,0)", "(4,4,0,0)", "(2,5,0,0)",
    "(0,3,2,0)", "(2,2,2,0)", "(4,1,2,0)", "(6,2,0,0)", "(1,4,1,0)",
    "(3,3,1,0)", "(5,2,1,0)", "(7,1,1,0)", "(9,0,1,0)", "(4,0,1,1)",
    "(7,0,0,1)", "(0,0,2,1)",
)
_B13_PUBLISHED = (
    "(9,2,0,0)", "(7,3,0,0)", "(5,4,0,0)", "(3,5,0,0)", "(1,3,2,0)",
    "(3,2,2,0)", "(5,1,2,0)", "(7,2,0,0)", "(2,4,1,0)", "(4,3,1,0)",
    "(6,2,1,0)", "(8,1,1,0)", "(10,0,1,0)", "(5,0,0,1)", "(8,0,0,1)",
    "(1,0,2,1)", "(0,0,1,2)",
)
_C16_PUBLISHED = (
    "(14,1,0,0)", "(12,2,0,0)", "(10,3,0,0)", "(8,4,0,0)", "(6,5,0,0)",
    "(2,7,0,0)", "(0,8,0,0)", "(0,3,2,0)", "(9,0,0,1)", "(11,0,1,0)",
    "(9,1,1,0)", "(7,2,1,0)", "(5,3,1,0)", "(3,4,1,0)", "(1,5,1,0)",
    "(4,0,1,1)",
)
_C17_PUBLISHED = (
    "(15,1,0)~(0,1,3,0)", "(13,2,0,0)", "(11,3,0,0)", "(9,4,0,0)",
    "(7,5,0,0)", "(3,7,0,0)", "(1,8,0,0)", "(10,0,0,1)", "(12,0,1,0)",
    "(10,1,1,0)", "(8,2,1,0)", "(6,3,1,0)", "(4,4,1,0)", "(2,5,1,0)",
    "(5,0,1,1)", "(0,6,1,0)", "(0,0,2,1)",
)
_D22_PUBLISHED = (
    "(0,4,2)", "(20,1,0)", "(18,2,0)", "(16,3,0)", "(14,4,0)", "(12,5,0)",
    "(10,6,0)", "(8,7,0)", "(6,8,0)", "(4,9,0)", "(15,0,1)", "(13,1,1)",
    "(11,2,1)", "(9,3,1)", "(7,4,1)", "(5,5,1)", "(3,6,1)", "(1,7,1)",
)
_D23_PUBLISHED = (
    "(21,1,0)", "(19,2,0)", "(17,3,0)", "(15,4,0)", "(13,5,0)", "(11,6,0)",
    "(9,7,0)", "(7,8,0)", "(5,9,0)", "(16,0,1)", "(14,1,1)", "(12,2,1)",
    "(10,3,1)", "(8,4,1)", "(6,5,1)", "(4,6,1)", "(2,7,1)", "(0,8,1)",
)

# --- frozen computed quotient bases (standard monomials) ---------------------

_A14_COMPUTED = (
    "(0,4,2)", "(1,5,1)", "(10,2,0)", "(11,0,1)", "(12,1,0)", "(2,0,4)",
    "(2,3,2)", "(3,4,1)", "(4,2,2)", "(4,5,0)", "(5,0,3)", "(5,3,1)",
    "(6,1,2)", "(6,4,0)", "(7,2,1)", "(8,0,2)", "(8,3,0)", "(9,1,1)",
)
_A15_COMPUTED = (
    "(0,0,5)", "(1,4,2)", "(10,1,1)", "(11,2,0)", "(12,0,1)", "(2,5,1)",
    "(3,0,4)", "(3,3,2)", "(4,4,1)", "(5,2,2)", "(5,5,0)", "(6,0,3)",
    "(6,3,1)", "(7,1,2)", "(7,4,0)", "(8,2,1)", "(9,0,2)", "(9,3,0)",
)
_B12_COMPUTED = (
    "(0,3,2,0)", "(1,0,2,1)", "(1,4,1,0)", "(10,1,0,0)", "(2,0,0,2)", "(2,2,2,0)",
    "(3,3,1,0)", "(4,0,1,1)", "(4,1,2,0)", "(4,4,0,0)", "(5,2,1,0)", "(6,0,2,0)",
    "(6,3,0,0)", "(7,0,0,1)", "(7,1,1,0)", "(8,2,0,0)", "(9,0,1,0)",
)
_B13_COMPUTED = (
    "(0,0,1,2)", "(1,3,2,0)", "(10,0,1,0)", "(2,0,2,1)", "(2,4,1,0)", "(3,0,0,2)",
    "(3,2,2,0)", "(4,3,1,0)", "(5,0,1,1)", "(5,1,2,0)", "(5,4,0,0)", "(6,2,1,0)",
    "(7,0,2,0)", "(7,3,0,0)", "(8,0,0,1)", "(8,1,1,0)", "(9,2,0,0)",
)
_C16_COMPUTED = (
    "(0,3,2,0)", "(1,5,1,0)", "(10,3,0,0)", "(11,0,1,0)", "(12,2,0,0)", "(14,1,0,0)",
    "(2,0,0,2)", "(3,4,1,0)", "(4,0,1,1)", "(4,6,0,0)", "(5,3,1,0)", "(6,5,0,0)",
    "(7,2,1,0)", "(8,4,0,0)", "(9,0,0,1)", "(9,1,1,0)",
)
_C17_COMPUTED = (
    "(0,0,2,1)", "(0,1,3,0)", "(0,6,1,0)", "(10,0,0,1)", "(10,1,1,0)", "(11,3,0,0)",
    "(12,0,1,0)", "(13,2,0,0)", "(2,5,1,0)", "(3,0,0,2)", "(4,4,1,0)", "(5,0,1,1)",
    "(5,6,0,0)", "(6,3,1,0)", "(7,5,0,0)", "(8,2,1,0)", "(9,4,0,0)",
)
_D22_COMPUTED = (
    "(0,4,2)", "(1,7,1)", "(10,6,0)", "(11,2,1)", "(12,5,0)", "(13,1,1)",
    "(14,4,0)", "(15,0,1)", "(16,3,0)", "(18,2,0)", "(20,1,0)", "(3,6,1)",
    "(4,9,0)", "(5,5,1)", "(6,8,0)", "(7,4,1)", "(8,7,0)", "(9,3,1)",
)
_D23_COMPUTED = (
    "(0,1,3)", "(0,8,1)", "(10,3,1)", "(11,6,0)", "(12,2,1)", "(13,5,0)",
    "(14,1,1)", "(15,4,0)", "(16,0,1)", "(17,3,0)", "(19,2,0)", "(2,7,1)",
    "(4,6,1)", "(5,9,0)", "(6,5,1)", "(7,8,0)", "(8,4,1)", "(9,7,0)",
)

_BASIS_TABLES = {
    ("a", 14): (_A14_PUBLISHED, _A14_COMPUTED,
        "one class is printed under both of its monomial names,"
        " (2,0,4)=(2,6,0); the computed basis keeps (2,0,4)"),
    ("a", 15): (_A15_PUBLISHED, _A15_COMPUTED,
        "(7,4,2) has weighted degree 21, not 15 — corrected to (7,4,0), the"
        " x0-image of (6,4,0); the alias pairs (3,0,4)=(3,6,0) and"
        " (0,0,5)=(0,6,1) are kept under their first names"),
    ("b", 12): (_B12_PUBLISHED, _B12_COMPUTED,
        "(6,2,0,0) has degree 10 — corrected to (6,0,2,0); (0,0,2,1) has"
        " degree 11 — corrected to (1,0,2,1); the class of (2,5,0,0) is"
        " represented by its twin (2,0,0,2) (x1^5 = -6*x3^2 in the quotient)"),
    ("b", 13): (_B13_PUBLISHED, _B13_COMPUTED,
        "(7,2,0,0) has degree 11 — corrected to (7,0,2,0); (5,0,0,1) has"
        " degree 10 — corrected to (5,0,1,1); (1,0,2,1) has degree 12 —"
        " corrected to (2,0,2,1); the class of (3,5,0,0) is represented by"
        " its twin (3,0,0,2)"),
    ("c", 16): (_C16_PUBLISHED, _C16_COMPUTED,
        "(0,8,0,0) lies in the Jacobian ideal"
        " (x1^8 = (1/8)x1*dF/dx1 - (1/16)x3*dF/dx3), so no basis contains"
        " it — corrected to (4,6,0,0); the class of (2,7,0,0) is represented"
        " by its twin (2,0,0,2)"),
    ("c", 17): (_C17_PUBLISHED, _C17_COMPUTED,
        "(1,8,0,0) lies in the Jacobian ideal — corrected to (5,6,0,0); the"
        " class of (3,7,0,0) is represented by its twin (3,0,0,2); the"
        " published alias pair (15,1,0)~(0,1,3,0) is kept as (0,1,3,0)"),
    ("d", 22): (_D22_PUBLISHED, _D22_COMPUTED, ""),
    ("d", 23): (_D23_PUBLISHED, _D23_COMPUTED,
        "the class of (21,1,0) is represented by its twin (0,1,3)"
        " (x2^3 = -22*x0^21 in the quotient)"),
}


def _serialize_exponent(case: str, e: tuple[int, ...]) -> str:
    if case in ("a", "d"):
        assert e[3] == 0
        return f"({e[0]},{e[1]},{e[2]})"
    return f"({e[0]},{e[1]},{e[2]},{e[3]})"


# --- check builders, one group per criterion ---------------------------------


def _checks_classification() -> list[_Check]:
    return [
        _Check(
            "01.classification",
            "amplitude-one census up to weight 101 finds exactly the four"
            " families",
            [
                "(12,[1,2,3,5])",
                "(14,[1,2,3,7])",
                "(16,[1,2,5,7])",
                "(22,[1,2,7,11])",
            ],
            lambda: [str(s) for s in enumerate_amplitude_one(101)],
        )
    ]


_HODGE_ROWS = (
    ("a", None, (1, 18, 1), 18),
    ("b", None, (1, 17, 1), 17),
    ("c", None, (1, 17, 1), 16),
    ("c-star", symbol(9, [1, 1, 3, 4]), (1, 16, 1), 16),
    ("d", None, (1, 18, 1), 18),
    ("d-star", symbol(12, [1, 1, 4, 6]), (1, 18, 1), 18),
)


def _checks_hodge() -> list[_Check]:
    out = []
    for tag, sym, hv, mod in _HODGE_ROWS:
        s = sym if sym is not None else family_record(tag).symbol
        out.append(
            _Check(
                f"02.hodge-{tag}",
                f"hodge vector and moduli count of {s}",
                {"hodge": list(hv), "moduli": mod},
                lambda s=s: {
                    "hodge": list(hodge_numbers(s)),
                    "moduli": moduli_count(s),
                },
            )
        )
    return out


def _checks_jacobian_generic_d() -> list[_Check]:
    def compute():
        G = family_record("d").generic_polynomial
        g22 = graded_piece(G, 22)
        g23 = graded_piece(G, 23)
        ker = torelli_test(G)
        return {
            "dim_ring_22": g22.dim_ring,
            "dim_jacobian_22": g22.dim_jacobian,
            "dim_quotient_22": g22.dim_quotient,
            "dim_jacobian_23": g23.dim_jacobian,
            "x0_kernel_22": ker.kernel_dimension,
            "dim_quotient_23": g23.dim_quotient,
        }

    return [
        _Check(
            "03.jacobian-generic-d",
            "graded Jacobian-ring data of the generic degree-22 reference"
            " member at degrees 22 and 23",
            {
                "dim_ring_22": 36,
                "dim_jacobian_22": 18,
                "dim_quotient_22": 18,
                "dim_jacobian_23": 21,
                "x0_kernel_22": 0,
                "dim_quotient_23": 18,
            },
            compute,
        )
    ]


_TORELLI_BASIC = {
    "a": (["x0^12*x1"], None, ""),
    "b": (
        ["x0^8*x1"],
        ["x0^10*x1"],
        "the published generator x0^8*x1 has weighted degree 10 in"
        " P(1,2,3,5), not 12; the kernel at degree 12 is spanned by"
        " x0^10*x1 (dimension 1 as published)",
    ),
    "c": (["x1^3*x2^2"], None, ""),
    "d": (["x1^4*x2^2"], None, ""),
}


def _checks_torelli() -> list[_Check]:
    out = []
    for case in CASES:
        printed, corrected, note = _TORELLI_BASIC[case]

        def compute(case=case):
            ker = torelli_test(family_record(case).basic_polynomial)
            return {
                "dimension": ker.kernel_dimension,
                "generators": sorted(format_poly(g) for g in ker.kernel_basis),
            }

        out.append(
            _Check(
                f"04.torelli-basic-{case}",
                f"kernel of multiplication by x0 on the basic ({case}) member"
                " at degree d",
                {"dimension": 1, "generators": printed},
                compute,
                correction=(
                    {"dimension": 1, "generators": corrected} if corrected else None
                ),
                annotation=note,
            )
        )
    for case in ("c", "d"):
        out.append(
            _Check(
                f"04.torelli-generic-{case}",
                f"kernel of multiplication by x0 on the generic ({case})"
                " reference member",
                {"dimension": 0},
                lambda case=case: {
                    "dimension": torelli_test(
                        family_record(case).generic_polynomial
                    ).kernel_dimension
                },
            )
        )
    return out


def _checks_basis_tables() -> list[_Check]:
    out = []
    for (case, k), (published, computed, note) in sorted(_BASIS_TABLES.items()):
        def compute(case=case, k=k):
            gp = graded_piece(family_record(case).basic_polynomial, k)
            return sorted(_serialize_exponent(case, e) for e in gp.quotient_basis)

        out.append(
            _Check(
                f"05.basis-{case}-{k}",
                f"monomial basis of the degree-{k} Jacobian-ring quotient of"
                f" the basic ({case}) member, as a set",
                sorted(published),
                compute,
                correction=sorted(computed) if note else None,
                annotation=note,
            )
        )
    return out


_RESOLUTION_ROWS = {
    "a": (["1/3(1,1) at P2"], [[3]], 24, "0"),
    "b": (["1/5(1,3) at P3"], [[2, 3]], 24, "0"),
    "c": (["1/5(1,1) at P2", "1/7(1,5) at P3"], [[5], [2, 2, 3]], 26, "-2"),
    "d": (["1/7(1,2) at P2"], [[4, 2]], 25, "-1"),
}


def _checks_resolution() -> list[_Check]:
    out = []
    for case in CASES:
        sings, chains, euler, k2 = _RESOLUTION_ROWS[case]

        def compute(case=case):
            rec = family_record(case)
            inv = invariant_report(rec.symbol, rec.basic_polynomial)
            return {
                "singularities": [str(s) for s in inv.singularities],
                "chains": [list(c.entries) for c in inv.chains],
                "euler_resolved": inv.euler_resolved,
                "k_squared": _frac(inv.k_squared),
                "noether_sum": _frac(inv.k_squared + inv.euler_resolved),
            }

        out.append(
            _Check(
                f"06.resolution-{case}",
                f"singularities, resolution chains (up to orientation), and"
                f" surface invariants of case ({case})",
                {
                    "singularities": sings,
                    "chains": chains,
                    "euler_resolved": euler,
                    "k_squared": k2,
                    "noether_sum": "24",
                },
                compute,
            )
        )
    return out


def _checks_discrepancy() -> list[_Check]:
    def compute_chain():
        coeffs, _total = discrepancy(hj_chain(7, 5))
        return {"coefficients": [_frac(c) for c in coeffs]}

    def compute_k2():
        rec = family_record("c")
        inv = invariant_report(rec.symbol, rec.basic_polynomial)
        total = sum(inv.delta_squares, Fraction(0))
        return {
            "o1_squared": _frac(inv.o1_squared),
            "delta_squared_total": _frac(total),
            "k_squared": _frac(inv.o1_squared + total),
        }

    return [
        _Check(
            "07.discrepancy-2-2-3",
            "discrepancy coefficients of the Hirzebruch-Jung chain [2,2,3]",
            {"coefficients": ["-1/7", "-2/7", "-3/7"]},
            compute_chain,
        ),
        _Check(
            "07.k2-decomposition-c",
            "case (c): K^2 = O(1)^2 + total discrepancy square, exactly -2",
            {
                "o1_squared": "8/35",
                "delta_squared_total": "-78/35",
                "k_squared": "-2",
            },
            compute_k2,
        ),
    ]


def _checks_lattices() -> list[_Check]:
    out = [
        _Check(
            "08.genus-picard-a",
            "genus of the case-(a) Picard lattice equals <1> + <-1>",
            {"equal": True},
            lambda: {
                "equal": genus_equal(
                    family_record("a").picard_gram, from_gram([[1, 0], [0, -1]])
                ).equal
            },
        ),
        _Check(
            "08.genus-picard-b",
            "genus of the case-(b) Picard lattice equals <1> + <-1> + <-2>",
            {"equal": True},
            lambda: {
                "equal": genus_equal(
                    family_record("b").picard_gram,
                    from_gram([[1, 0, 0], [0, -1, 0], [0, 0, -2]]),
                ).equal
            },
        ),
    ]

    def verdict(case):
        rec = family_record(case)
        rep = verify_transcendental(rec.picard_gram, rec.transcendental_gram)
        first_fail = next((c.name for c in rep.checks if not c.passed), None)
        return {"passed": rep.passed, "first_failure": first_fail}

    for case in ("a", "b", "d"):
        out.append(
            _Check(
                f"08.transcendental-{case}",
                f"case ({case}): {family_record(case).transcendental_label}"
                " passes the orthogonal-complement checklist",
                {"passed": True, "first_failure": None},
                lambda case=case: verdict(case),
            )
        )
    out.append(
        _Check(
            "08.transcendental-c-certified",
            f"case (c): the certified lattice"
            f" {family_record('c').transcendental_label} passes the checklist",
            {"passed": True, "first_failure": None},
            lambda: verdict("c"),
        )
    )

    def rejected():
        rep = verify_transcendental(
            family_record("c").picard_gram, case_c_rejected_transcendental()
        )
        first_fail = next((c.name for c in rep.checks if not c.passed), None)
        return {"passed": rep.passed, "first_failure": first_fail}

    out.append(
        _Check(
            "08.transcendental-c-rank14-rejected",
            f"case (c): the published rank-14 candidate"
            f" {CASE_C_REJECTED_LABEL} must fail the rank check"
            " (the failure is the expected outcome)",
            {"passed": False, "first_failure": "rank sum"},
            rejected,
        )
    )
    return out


def _checks_disc_forms() -> list[_Check]:
    def values():
        fA2 = discriminant_form(root("A", 2))
        f2 = discriminant_form(unit(2))
        vA2 = sorted({fA2.q(x) for x in fA2.elements() if any(x)})
        v2 = sorted({f2.q(x) for x in f2.elements() if any(x)})
        return {
            "q_A2_on_generators": [_frac(v) for v in vA2],
            "q_unit2_on_generators": [_frac(v) for v in v2],
        }

    def asymmetry():
        fA2 = discriminant_form(root("A", 2))
        fA2m = discriminant_form(scale(root("A", 2), -1))
        return {"isomorphic": disc_form_isomorphic(fA2, fA2m)}

    return [
        _Check(
            "09.disc-form-values",
            "discriminant quadratic forms: q(A2) on Z/3 and q(<2>) on Z/2",
            {
                "q_A2_on_generators": ["-2/3"],
                "q_unit2_on_generators": ["1/2"],
            },
            values,
            correction={
                "q_A2_on_generators": ["2/3"],
                "q_unit2_on_generators": ["1/2"],
            },
            annotation=(
                "with the positive-definite A2 Gram used here the nonzero"
                " values of q(A2) are 2/3 = -(-2/3) mod 2Z; the published"
                " -2/3 (= 4/3 mod 2Z) is the value on A2(-1), matching the"
                " convention of embedding root lattices negative-definitely;"
                " q(<2>) = <1/2> agrees verbatim"
            ),
        ),
        _Check(
            "09.disc-form-asymmetry",
            "q(A2) and q(A2(-1)) are not isomorphic (brute force)",
            {"isomorphic": False},
            asymmetry,
        ),
    ]


def _checks_graph_lattices() -> list[_Check]:
    out = []
    for k, rank in ((7, 12), (8, 13), (9, 14)):
        out.append(
            _Check(
                f"10.graph-lattice-2-3-{k}",
                f"vanishing-cycle graph lattice T(2,3,{k}): rank and"
                " nondegeneracy",
                {"rank": rank, "determinant_nonzero": True},
                lambda k=k: {
                    "rank": dynkin_graph_lattice(2, 3, k).rank,
                    "determinant_nonzero": dynkin_graph_lattice(
                        2, 3, k
                    ).nondegenerate(),
                },
            )
        )
    return out


def _checks_fibers() -> list[_Check]:
    out = []
    for case in CASES:
        out.append(
            _Check(
                f"11.fiber-euler-{case}",
                f"fiber configuration of case ({case}) has total Euler"
                " number 24",
                {"total": 24, "on_target": True},
                lambda case=case: {
                    "total": fiber_config_euler(
                        list(family_record(case).fiber_configuration)
                    ).total,
                    "on_target": fiber_config_euler(
                        list(family_record(case).fiber_configuration)
                    ).on_k3_target,
                },
            )
        )

    def kod():
        delta, kappa = kodaira_dimension(2, 0, [2])
        return {"delta": _frac(delta), "kappa": _kappa(kappa)}

    out.append(
        _Check(
            "11.kodaira-multiple-fiber",
            "genus-1 fibration with chi=2, base genus 0, one double fiber:"
            " delta = 1/2, kappa = 1",
            {"delta": "1/2", "kappa": 1},
            kod,
        )
    )
    return out


def _checks_normal_forms(trials: int, seed: int) -> list[_Check]:
    moduli = _Check(
        "12.moduli-dims",
        "normal-form moduli dimensions per case",
        {"a": 18, "b": 17, "c": 16, "d": 18},
        lambda: {case: normal_form_moduli_dim(case) for case in CASES},
    )

    def roundtrips():
        rng = random.Random(seed)
        failures = 0
        for case in CASES:
            for _ in range(trials):
                F = random_normal_form(case, rng)
                t = random_torus_element(case, rng)
                G = t.apply(F)
                F2, transform = reduce_to_normal_form(G, case)
                if transform.apply(G) != F2:
                    failures += 1
                    continue
                if torus_equivalent(F2, F, case) is None:
                    failures += 1
        return {"trials_per_case": trials, "failures": failures}

    return [
        moduli,
        _Check(
            "12.roundtrips",
            f"{trials} random normal forms per case: a random torus"
            " translate reduces back to a torus-equivalent normal form with"
            " an exactly faithful transform",
            {"trials_per_case": trials, "failures": 0},
            roundtrips,
        ),
    ]


def _reference_polynomials():
    """The six reference members: four basic, plus the generic (c),(d)."""
    out = []
    for case in CASES:
        rec = family_record(case)
        out.append((f"basic-{case}", rec.symbol, rec.basic_polynomial))
    for case in ("c", "d"):
        rec = family_record(case)
        out.append((f"generic-{case}", rec.symbol, rec.generic_polynomial))
    return out


def _checks_properties(seed: int) -> list[_Check]:
    def poincare():
        violations = 0
        for tag, sym, _hv, _mod in _HODGE_ROWS:
            s = sym if sym is not None else family_record(tag).symbol
            ps = poincare_series(s)
            mu, T = ps.coefficients, ps.socle_bound
            if any(mu[k] != mu[T - k] for k in range(T + 1)):
                violations += 1
            d = s.degree
            total = 1
            for a in s.weights:
                total *= Fraction(d - a, a)
            if sum(mu) != total:
                violations += 1
        return {"violations": violations}

    def series_vs_jacobian():
        mismatches = 0
        for _tag, sym, F in _reference_polynomials():
            ps = poincare_series(sym)
            T = ps.socle_bound
            for k in range(T + 1):
                if graded_piece(F, k).dim_quotient != ps.mu(k):
                    mismatches += 1
        return {"violations": mismatches}

    def _random_unimodular(rng, n):
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(3 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                m[i][k] += c * m[j][k]
        return m

    _PALETTE = (
        lambda: family_record("a").picard_gram,
        lambda: family_record("b").picard_gram,
        lambda: family_record("c").picard_gram,
        lambda: root("A", 2),
        lambda: scale(root("E", 8), -1),
        lambda: from_gram([[2, 1], [1, -2]]),
        lambda: unit(6),
    )

    def _congruent(L, U):
        n = L.rank
        g = L.gram
        ug = [
            [sum(U[i][k] * g[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        return from_gram(
            [
                [sum(ug[i][k] * U[j][k] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        )

    def snf_invariance():
        rng = random.Random(seed + 1)
        violations = 0
        for _ in range(20):
            L = rng.choice(_PALETTE)()
            M = _congruent(L, _random_unimodular(rng, L.rank))
            if invariant_factors(L) != invariant_factors(M):
                violations += 1
        return {"violations": violations}

    def genus_invariance():
        rng = random.Random(seed + 2)
        violations = 0
        for _ in range(20):
            L = rng.choice(_PALETTE)()
            M = _congruent(L, _random_unimodular(rng, L.rank))
            if genus_fingerprint(L) != genus_fingerprint(M):
                violations += 1
        return {"violations": violations}

    def hj_roundtrip():
        violations = 0
        for h in range(2, 501):
            for q in range(1, h):
                if gcd(h, q) != 1:
                    continue
                entries = hj_chain(h, q).entries
                value = Fraction(entries[-1])
                for c in reversed(entries[:-1]):
                    value = c - 1 / value
                if value != Fraction(h, q):
                    violations += 1
        return {"violations": violations}

    return [
        _Check(
            "13.poincare-identities",
            "Poincare-series duality and total-dimension identities on all"
            " six table rows",
            {"violations": 0},
            poincare,
        ),
        _Check(
            "13.series-vs-jacobian",
            "closed-form series equals explicit Jacobian-ring dimensions for"
            " every degree k <= T on all six reference polynomials",
            {"violations": 0},
            series_vs_jacobian,
        ),
        _Check(
            "13.snf-invariance",
            "Smith invariant factors are unimodular-congruence invariant"
            " (20 random congruences)",
            {"violations": 0},
            snf_invariance,
        ),
        _Check(
            "13.genus-invariance",
            "genus fingerprints are unimodular-congruence invariant"
            " (20 random congruences)",
            {"violations": 0},
            genus_invariance,
        ),
        _Check(
            "13.hj-roundtrip",
            "Hirzebruch-Jung expansion of h/q re-evaluates to h/q for every"
            " coprime pair with h <= 500",
            {"violations": 0},
            hj_roundtrip,
        ),
    ]


def _all_checks(roundtrip_trials: int, seed: int) -> list[_Check]:
    checks = (
        _checks_classification()
        + _checks_hodge()
        + _checks_jacobian_generic_d()
        + _checks_torelli()
        + _checks_basis_tables()
        + _checks_resolution()
        + _checks_discrepancy()
        + _checks_lattices()
        + _checks_disc_forms()
        + _checks_graph_lattices()
        + _checks_fibers()
        + _checks_normal_forms(roundtrip_trials, seed)
        + _checks_properties(seed)
    )
    checks.sort(key=lambda c: c.check_id)
    ids = [c.check_id for c in checks]
    assert len(ids) == len(set(ids)), "check identifiers must be unique"
    return checks


def reproduce_paper(
    *,
    roundtrip_trials: int = 100,
    seed: int = 20260813,
    corrupt: str | None = None,
) -> ReproduceSummary:
    """Re-derive every published reference value and report expected/actual.

    ``corrupt`` names a check whose expected value is deliberately replaced
    by a sentinel, forcing that row to fail — a self-test hook proving the
    harness can report failures.
    """
    checks = _all_checks(roundtrip_trials, seed)
    if corrupt is not None:
        by_id = {c.check_id: c for c in checks}
        if corrupt not in by_id:
            raise InvalidInput(
                f"unknown check id {corrupt!r}; known ids:"
                f" {', '.join(sorted(by_id))}"
            )
        target = by_id[corrupt]
        checks = [
            _Check(
                c.check_id,
                c.description,
                "__deliberately_corrupted__",
                c.compute,
                None,
                "self-test: expected value deliberately corrupted",
            )
            if c is target
            else c
            for c in checks
        ]
    return ReproduceSummary(tuple(c.run() for c in checks))
