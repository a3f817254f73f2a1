"""Command-line front end.

Subcommands: classify, check-qs, hodge, moduli, jacobian, resolve, lattice,
normalform, equiv, report, reproduce.  Common flags (--json, --weights,
--degree, --poly, --poly-file) are accepted by every subcommand they apply
to.  Exit codes: 0 success, 1 semantic failure (check failed, not
quasi-smooth, not equivalent, computation error), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import InvalidInput, WpsurfError
from .families import CASES, family_record
from .hodge import hodge_numbers, moduli_count
from .jacobian import graded_piece, multiplication_kernel
from .lattice import (
    discriminant_form,
    from_gram,
    genus_equal,
    verify_transcendental,
)
from .normalform import (
    is_normal_form,
    reduce_to_normal_form,
    scalar_field,
    torus_equivalent,
)
from .poly import WPolynomial, format_poly, monomial, parse_poly, symbol, weights
from .quasismooth import enumerate_amplitude_one, is_quasismooth
from .reports import _frac, report_family, reproduce_paper
from .resolution import invariant_report


def _add_common(p: argparse.ArgumentParser, *, poly: bool = False,
                wts: bool = False, degree: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON")
    if wts:
        p.add_argument("--weights", help="comma-separated weights, e.g. 1,2,3,7")
    if degree:
        p.add_argument("--degree", type=int, help="weighted degree d")
    if poly:
        p.add_argument("--poly", help="polynomial text")
        p.add_argument("--poly-file", help="UTF-8 file holding polynomial text")


class _UsageError(Exception):
    """Malformed command-line input (missing flag, unparsable value)."""


def _weights_from(args) -> "weights":
    if not getattr(args, "weights", None):
        raise _UsageError("--weights is required for this command")
    try:
        vals = [int(v) for v in args.weights.split(",")]
        return weights(*vals)
    except (ValueError, InvalidInput) as exc:
        raise _UsageError(f"cannot parse --weights {args.weights!r}: {exc}") from None


def _poly_text(args, attr: str = "poly", file_attr: str = "poly_file") -> str:
    text = getattr(args, attr, None)
    path = getattr(args, file_attr, None)
    if text is not None and path is not None:
        raise _UsageError("give either --poly or --poly-file, not both")
    if text is not None:
        return text
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {path}: {exc}") from None
    raise _UsageError("a polynomial is required: pass --poly or --poly-file")


def _parse_or_usage(text: str, w) -> WPolynomial:
    try:
        return parse_poly(text, w)
    except InvalidInput as exc:
        raise _UsageError(f"cannot parse polynomial: {exc}") from None


def _poly_from(args) -> WPolynomial:
    return _parse_or_usage(_poly_text(args), _weights_from(args))


def _symbol_from(args):
    w = _weights_from(args)
    if getattr(args, "degree", None) is None:
        raise _UsageError("--degree is required for this command")
    return symbol(args.degree, list(w))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _gram_from_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            rows = json.load(fh)
        return from_gram(rows)
    except (OSError, json.JSONDecodeError, InvalidInput, TypeError) as exc:
        raise _UsageError(f"cannot load Gram matrix from {path}: {exc}") from None


# --- subcommand handlers -----------------------------------------------------


def _cmd_classify(args) -> int:
    syms = enumerate_amplitude_one(args.max_b)
    _emit(
        args,
        {"max_b": args.max_b, "symbols": [str(s) for s in syms]},
        "\n".join(str(s) for s in syms),
    )
    return 0


def _cmd_check_qs(args) -> int:
    cert = is_quasismooth(_poly_from(args))
    payload = {
        "verdict": cert.verdict,
        "socle_bound": cert.socle_bound,
        "window": list(cert.window),
        "window_dimensions": list(cert.window_dimensions),
        "total_dimension": cert.total_dimension,
        "failing_degree": cert.failing_degree,
    }
    text = (
        f"quasi-smooth: {cert.verdict}\n"
        f"socle bound T = {cert.socle_bound}, window {list(cert.window)},"
        f" total dimension {cert.total_dimension}"
    )
    if cert.failing_degree is not None:
        text += f"\nfirst failing degree: {cert.failing_degree}"
    _emit(args, payload, text)
    return 0 if cert.verdict else 1


def _cmd_hodge(args) -> int:
    sym = _symbol_from(args)
    hv = hodge_numbers(sym)
    payload = {
        "hodge": list(hv),
        "moduli": moduli_count(sym),
        "amplitude": sym.degree - sum(sym.weights),
    }
    _emit(
        args,
        payload,
        f"hodge {payload['hodge']}  moduli {payload['moduli']}"
        f"  amplitude {payload['amplitude']}",
    )
    return 0


def _cmd_moduli(args) -> int:
    sym = _symbol_from(args)
    payload = {"moduli": moduli_count(sym)}
    _emit(args, payload, str(payload["moduli"]))
    return 0


def _cmd_jacobian(args) -> int:
    F = _poly_from(args)
    if args.degree is None:
        raise InvalidInput("--degree is required: which graded piece?")
    gp = graded_piece(F, args.degree)
    w = F.weights
    basis = [format_poly(monomial(w, e)) for e in gp.quotient_basis]
    payload = {
        "degree": gp.degree,
        "dim_ring": gp.dim_ring,
        "dim_jacobian": gp.dim_jacobian,
        "dim_quotient": gp.dim_quotient,
        "quotient_basis": basis,
    }
    lines = [
        f"degree {gp.degree}: dim ring {gp.dim_ring}, dim jacobian"
        f" {gp.dim_jacobian}, dim quotient {gp.dim_quotient}",
        "quotient basis: " + (", ".join(basis) if basis else "(empty)"),
    ]
    if args.kernel_times is not None:
        g = _parse_or_usage(args.kernel_times, w)
        ker = multiplication_kernel(F, g, args.degree)
        payload["kernel"] = {
            "multiplier": format_poly(g),
            "source_degree": ker.source_degree,
            "dimension": ker.kernel_dimension,
            "basis": [format_poly(b) for b in ker.kernel_basis],
            "rank": ker.rank_of_map,
            "dim_source": ker.dim_quotient_source,
            "dim_target": ker.dim_quotient_target,
        }
        lines.append(
            f"kernel of *({format_poly(g)}): dimension {ker.kernel_dimension},"
            f" basis {payload['kernel']['basis']}"
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_resolve(args) -> int:
    F = _poly_from(args)
    degree = args.degree if args.degree is not None else F.degree()
    sym = symbol(degree, list(F.weights))
    inv = invariant_report(sym, F)
    payload = {
        "symbol": str(sym),
        "singularities": [
            {
                "type": str(s),
                "order": s.order,
                "chain": list(c.entries),
                "discrepancies": [_frac(x) for x in d],
                "delta_squared": _frac(d2),
            }
            for s, c, d, d2 in zip(
                inv.singularities, inv.chains, inv.discrepancies, inv.delta_squares
            )
        ],
        "euler_quasismooth": inv.euler_x,
        "euler_resolved": inv.euler_resolved,
        "chi": inv.chi,
        "o1_squared": _frac(inv.o1_squared),
        "k_squared": _frac(inv.k_squared),
        "noether_sum": _frac(inv.k_squared + inv.euler_resolved),
        "noether_holds": inv.k_squared + inv.euler_resolved == 12 * inv.chi,
    }
    lines = [f"symbol {sym}"]
    for s in payload["singularities"]:
        lines.append(
            f"  {s['type']}: chain {s['chain']}, discrepancies"
            f" {s['discrepancies']}, delta^2 {s['delta_squared']}"
        )
    lines.append(
        f"  e(X) {inv.euler_x} -> e(X~) {inv.euler_resolved},"
        f" K^2 {_frac(inv.k_squared)},"
        f" noether sum {payload['noether_sum']} (12*chi = {12 * inv.chi}):"
        f" {'ok' if payload['noether_holds'] else 'VIOLATED'}"
    )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_lattice(args) -> int:
    if args.lattice_cmd == "genus-equal":
        cmp = genus_equal(_gram_from_file(args.gram_a), _gram_from_file(args.gram_b))
        payload = {
            "equal": cmp.equal,
            "reason": cmp.reason,
            "isometry_note": cmp.isometry_note,
        }
        _emit(
            args,
            payload,
            f"genus equal: {cmp.equal}"
            + (f" ({cmp.reason})" if cmp.reason else "")
            + f"\n{cmp.isometry_note}",
        )
        return 0 if cmp.equal else 1
    if args.lattice_cmd == "disc":
        L = _gram_from_file(args.gram)
        f = discriminant_form(L)
        payload = {
            "invariant_factors": list(f.invariant_factors),
            "group_order": f.order,
            "even": f.even,
            "q_values_on_generators": (
                [_frac(v) for v in f.q_values] if f.q_values is not None else None
            ),
            "b_matrix": [[_frac(v) for v in row] for row in f.b_matrix],
        }
        _emit(
            args,
            payload,
            f"discriminant group Z/{' x Z/'.join(map(str, f.invariant_factors)) or '1'}"
            f" (order {f.order}), {'even' if f.even else 'odd'} lattice\n"
            f"q on generators: {payload['q_values_on_generators']}\n"
            f"b matrix: {payload['b_matrix']}",
        )
        return 0
    # verify-transcendental
    rec = family_record(args.case)
    T = (
        _gram_from_file(args.gram)
        if getattr(args, "gram", None)
        else rec.transcendental_gram
    )
    rep = verify_transcendental(rec.picard_gram, T)
    payload = {
        "case": args.case,
        "candidate_rank": T.rank,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in rep.checks
        ],
        "passed": rep.passed,
    }
    lines = [f"case ({args.case}), candidate rank {T.rank}"]
    for c in rep.checks:
        lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    lines.append(f"passed: {rep.passed}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.passed else 1


def _cmd_normalform(args) -> int:
    w = family_record(args.case).symbol.weights
    F = _parse_or_usage(_poly_text(args), w)
    field = scalar_field(args.field, args.precision)
    F2, transform = reduce_to_normal_form(F, args.case, field)
    check = is_normal_form(F2, args.case) if args.field == "exact" else None
    payload = {
        "case": args.case,
        "normal_form": format_poly(F2) if args.field == "exact" else str(F2),
        "is_normal_form": check.ok if check is not None else None,
        "transform": transform.describe(),
        "identity_transform": transform.is_identity,
    }
    lines = [f"normal form: {payload['normal_form']}"]
    lines += [f"  {step}" for step in payload["transform"]]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_equiv(args) -> int:
    w = family_record(args.case).symbol.weights
    F1 = _parse_or_usage(args.poly1, w)
    F2 = _parse_or_usage(args.poly2, w)
    t = torus_equivalent(F1, F2, args.case)
    payload = {
        "case": args.case,
        "equivalent": t is not None,
        "torus_element": [_frac(c) for c in t.c] if t is not None else None,
    }
    if t is not None:
        text = f"equivalent via torus scaling {payload['torus_element']}"
    else:
        text = "not equivalent"
    _emit(args, payload, text)
    return 0 if t is not None else 1


def _cmd_report(args) -> int:
    rep = report_family(args.case)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.render_text(), end="")
    return 0


def _cmd_reproduce(args) -> int:
    summary = reproduce_paper(
        roundtrip_trials=args.trials, seed=args.seed, corrupt=args.corrupt
    )
    if args.json:
        print(summary.to_json())
    else:
        print(summary.render_text(), end="")
    return 0 if summary.ok else 1


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wpsurf",
        description=(
            "Classification and invariants of quasi-smooth amplitude-one"
            " hypersurfaces in weighted projective 3-space"
        ),
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("classify", help="enumerate the amplitude-one families")
    sp.add_argument("--max-b", type=int, default=101, help="largest weight tried")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("check-qs", help="quasi-smoothness certificate")
    _add_common(sp, poly=True, wts=True)
    sp.set_defaults(fn=_cmd_check_qs)

    sp = sub.add_parser("hodge", help="hodge vector, moduli count, amplitude")
    _add_common(sp, wts=True, degree=True)
    sp.set_defaults(fn=_cmd_hodge)

    sp = sub.add_parser("moduli", help="projective moduli count")
    _add_common(sp, wts=True, degree=True)
    sp.set_defaults(fn=_cmd_moduli)

    sp = sub.add_parser("jacobian", help="graded Jacobian-ring piece")
    _add_common(sp, poly=True, wts=True, degree=True)
    sp.add_argument(
        "--kernel-times",
        metavar="G",
        help="also report the kernel of multiplication by G from the given degree",
    )
    sp.set_defaults(fn=_cmd_jacobian)

    sp = sub.add_parser("resolve", help="singularities, chains, surface invariants")
    _add_common(sp, poly=True, wts=True, degree=True)
    sp.set_defaults(fn=_cmd_resolve)

    sp = sub.add_parser("lattice", help="lattice computations")
    lsub = sp.add_subparsers(dest="lattice_cmd", required=True)
    lp = lsub.add_parser("genus-equal", help="compare genus fingerprints")
    lp.add_argument("--gram-a", required=True, help="JSON file: integer Gram rows")
    lp.add_argument("--gram-b", required=True, help="JSON file: integer Gram rows")
    _add_common(lp)
    lp.set_defaults(fn=_cmd_lattice)
    lp = lsub.add_parser("disc", help="discriminant group and forms")
    lp.add_argument("--gram", required=True, help="JSON file: integer Gram rows")
    _add_common(lp)
    lp.set_defaults(fn=_cmd_lattice)
    lp = lsub.add_parser(
        "verify-transcendental",
        help="orthogonal-complement checklist against a family's Picard lattice",
    )
    lp.add_argument("--case", required=True, choices=CASES)
    lp.add_argument(
        "--gram", help="JSON Gram file for the candidate (default: curated lattice)"
    )
    _add_common(lp)
    lp.set_defaults(fn=_cmd_lattice)

    sp = sub.add_parser("normalform", help="reduce to the family normal form")
    sp.add_argument("--case", required=True, choices=CASES)
    sp.add_argument("--field", choices=("exact", "float"), default="exact")
    sp.add_argument("--precision", type=int, default=50)
    _add_common(sp, poly=True)
    sp.set_defaults(fn=_cmd_normalform)

    sp = sub.add_parser("equiv", help="torus equivalence of two normal forms")
    sp.add_argument("--case", required=True, choices=CASES)
    sp.add_argument("--poly1", required=True)
    sp.add_argument("--poly2", required=True)
    _add_common(sp)
    sp.set_defaults(fn=_cmd_equiv)

    sp = sub.add_parser("report", help="full dossier for one family")
    sp.add_argument("--case", required=True, choices=CASES)
    _add_common(sp)
    sp.set_defaults(fn=_cmd_report)

    sp = sub.add_parser("reproduce", help="re-derive all published reference values")
    sp.add_argument("--trials", type=int, default=100,
                    help="random round-trips per case in the normal-form check")
    sp.add_argument("--seed", type=int, default=20260813)
    sp.add_argument("--corrupt", metavar="CHECK_ID",
                    help="self-test: deliberately corrupt one expected value")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_reproduce)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (WpsurfError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
