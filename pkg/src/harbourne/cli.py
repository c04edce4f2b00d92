"""Command-line front end.

One subcommand per library operation group; every report goes to standard
output in one of three formats (json, csv, pretty).  Machine-readable
output is exact: rationals appear as {"num": ..., "den": ...} objects with
string-encoded integers plus a rounded decimal *string*; collections are
sorted, so identical inputs produce byte-identical output.

Exit status: 0 success, 1 malformed input, 2 validation/domain failure
(with the report still emitted).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import arrangement, ballquotient, bounds, covering, incidence
from .errors import HarbourneError, InputFormatError
from .pullback import (
    GALLERY_NAMES,
    gallery_arrangement,
    line_arrangement_from_json,
    plane_harbourne_constant,
    pullback,
)
from .rationals import Rational, decimal_string, rational_parts
from .reports import ValidationReport

_EXIT_OK = 0
_EXIT_MALFORMED = 1
_EXIT_INVALID = 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    emit = _Emitter(args.format, args.decimal_places)
    try:
        payload, status = args.handler(args)
    except InputFormatError as exc:
        emit.write({"command": args.command, "error": str(exc)})
        return _EXIT_MALFORMED
    except (json.JSONDecodeError, OSError) as exc:
        emit.write({"command": args.command, "error": f"cannot read input: {exc}"})
        return _EXIT_MALFORMED
    except HarbourneError as exc:
        report = getattr(exc, "report", None)
        doc = {"command": args.command, "error": str(exc)}
        if report is not None:
            doc["checks"] = _checks_json(report)
        emit.write(doc)
        return _EXIT_INVALID
    emit.write(payload)
    return status


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harbourne",
        description="Exact invariants and negativity bounds for transversal "
        "curve arrangements on ruled surfaces.",
    )
    parser.add_argument(
        "--format",
        choices=("json", "csv", "pretty"),
        default="json",
        help="output format (default: json)",
    )
    parser.add_argument(
        "--decimal-places",
        type=int,
        default=6,
        help="digits after the point in rendered decimals (default: 6)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, with_input: bool = True):
        p = sub.add_parser(name, help=help_text)
        if with_input:
            p.add_argument(
                "input",
                help="path to a JSON document, inline JSON, or '-' for stdin",
            )
        p.set_defaults(handler=handler)
        return p

    add("validate", _cmd_validate, "validate an arrangement profile")
    add("hconst", _cmd_hconst, "Harbourne constant of a profile")
    add("cover", _cmd_cover, "Chern invariants of the abelian cover")
    add("bounds", _cmd_bounds, "all lower bounds and inequality checks")

    scan_p = add("bq-scan", _cmd_bq_scan, "ball-quotient infeasibility scan", with_input=False)
    scan_p.add_argument("--config", help="JSON file with the scan grid")
    for key in ("g", "e", "a", "b-offset", "d"):
        scan_p.add_argument(
            f"--{key}", nargs=2, type=int, metavar=("LO", "HI"),
            help=f"inclusive range for {key.replace('-', '_')}",
        )

    pull_p = add("pullback", _cmd_pullback, "pull a line arrangement back to X_e", with_input=False)
    pull_p.add_argument("--name", choices=GALLERY_NAMES, help="built-in arrangement")
    pull_p.add_argument("--input", help="line arrangement JSON (path, inline, or '-')")
    pull_p.add_argument("--e", type=int, required=True, help="invariant e of the target surface")

    add("gallery", _cmd_gallery, "list built-in line arrangements", with_input=False)

    inc_p = add("incidence-check", _cmd_incidence, "audit an incidence structure")
    inc_p.add_argument("--expected-h", type=int, help="pairwise co-occurrence to audit against")
    inc_p.add_argument("--g", type=int, help="surface genus (with --e/--a/--b: derive a profile)")
    inc_p.add_argument("--e", type=int, help="surface invariant e")
    inc_p.add_argument("--a", type=int, help="class coefficient a")
    inc_p.add_argument("--b", type=int, help="class coefficient b")
    return parser


# --- input helpers ----------------------------------------------------------


def _read_json(source: str) -> object:
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _load_profile(source: str) -> arrangement.ArrangementProfile:
    return arrangement.profile_from_json(_read_json(source))


# --- value rendering --------------------------------------------------------


class _Emitter:
    def __init__(self, fmt: str, places: int):
        self.fmt = fmt
        self.places = places

    def rat(self, value: Rational) -> dict:
        num, den = rational_parts(value)
        return {
            "num": str(num),
            "den": str(den),
            "decimal": decimal_string(value, self.places),
        }

    def write(self, payload: dict) -> None:
        if self.fmt == "json":
            text = json.dumps(payload, sort_keys=True, indent=2)
            sys.stdout.write(text + "\n")
        elif self.fmt == "csv":
            sys.stdout.write(_to_csv(payload))
        else:
            sys.stdout.write(_to_pretty(payload))


def _flatten(payload: object, prefix: str = "") -> list[tuple[str, object]]:
    rows: list[tuple[str, object]] = []
    if isinstance(payload, dict):
        if set(payload) == {"num", "den", "decimal"}:
            rows.append((prefix, payload))
            return rows
        for key in sorted(payload):
            path = f"{prefix}.{key}" if prefix else str(key)
            rows.extend(_flatten(payload[key], path))
    elif isinstance(payload, (list, tuple)):
        for idx, item in enumerate(payload):
            rows.extend(_flatten(item, f"{prefix}[{idx}]"))
    else:
        rows.append((prefix, payload))
    return rows


def _to_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value", "decimal"])
    for key, value in _flatten(payload):
        if isinstance(value, dict):
            writer.writerow([key, f"{value['num']}/{value['den']}", value["decimal"]])
        elif isinstance(value, bool):
            writer.writerow([key, "true" if value else "false", ""])
        elif value is None:
            writer.writerow([key, "", ""])
        else:
            writer.writerow([key, str(value), ""])
    return buf.getvalue()


def _to_pretty(payload: dict) -> str:
    lines = []
    for key, value in _flatten(payload):
        if isinstance(value, dict):
            if value["den"] == "1":
                lines.append(f"{key} = {value['num']} ({value['decimal']})")
            else:
                lines.append(f"{key} = {value['num']}/{value['den']} ({value['decimal']})")
        elif isinstance(value, bool):
            lines.append(f"{key} = {'true' if value else 'false'}")
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def _checks_json(report: ValidationReport) -> list[dict]:
    return [
        {"name": c.name, "status": c.status.value, "detail": c.detail}
        for c in report.checks
    ]


# --- subcommands ------------------------------------------------------------


def _cmd_validate(args) -> tuple[dict, int]:
    profile = _load_profile(args.input)
    report = arrangement.validate_four_curve(profile)
    payload = {
        "command": "validate",
        "passed": not report.failed,
        "checks": _checks_json(report),
    }
    return payload, _EXIT_OK if not report.failed else _EXIT_INVALID


def _cmd_hconst(args) -> tuple[dict, int]:
    emit = _Emitter(args.format, args.decimal_places)
    profile = _load_profile(args.input)
    value = arrangement.harbourne_constant(profile)
    st = arrangement.stats(profile)
    payload = {
        "command": "hconst",
        "harbourne": emit.rat(value),
        "d": profile.d,
        "h": str(st.h),
        "f0": str(st.f0),
        "f1": str(st.f1),
        "f2": str(st.f2),
    }
    return payload, _EXIT_OK


def _cmd_cover(args) -> tuple[dict, int]:
    profile = _load_profile(args.input)
    inv = covering.cover_invariants(profile)
    hint = covering.canonical_positivity_hint(profile)
    payload = {
        "command": "cover",
        "scale_exponent": inv.scale_exponent,
        "euler_norm": str(inv.euler_norm),
        "c1_sq_norm": str(inv.c1_sq_norm),
        "bmy_gap_norm": str(inv.bmy_gap_norm),
        "euler_absolute": str(inv.euler_absolute),
        "c1_sq_absolute": str(inv.c1_sq_absolute),
        "bmy_gap_absolute": str(inv.bmy_gap_absolute),
        "minus_two_curve_count": str(inv.minus_two_curve_count),
        "elliptic_minus_four_count": str(inv.elliptic_minus_four_count),
        "bmy_gap_nonnegative": inv.bmy_gap_norm >= 0,
        "general_type_guaranteed": hint.general_type_guaranteed,
    }
    return payload, _EXIT_OK


def _cmd_bounds(args) -> tuple[dict, int]:
    emit = _Emitter(args.format, args.decimal_places)
    profile = _load_profile(args.input)
    report = bounds.bound_report(profile)
    transform = bounds.strict_transform_bound(profile)
    a, b = profile.curve_class.a, profile.curve_class.b
    try:
        global_lower = emit.rat(
            bounds.global_lower_bound(profile.surface, a, b)
        )
    except HarbourneError:
        global_lower = None
    payload = {
        "command": "bounds",
        "harbourne": emit.rat(report.harbourne),
        "general_lower": emit.rat(report.general_lower),
        "c0_lower": emit.rat(report.c0_lower) if report.c0_lower is not None else None,
        "hirzebruch_lhs": emit.rat(report.hirzebruch_lhs),
        "hirzebruch_rhs": emit.rat(report.hirzebruch_rhs),
        "chern_residual": emit.rat(report.chern_residual),
        "global_lower": global_lower,
        "strict_transform_sq": emit.rat(transform.value),
        "strict_transform_lower": emit.rat(transform.lower),
        "satisfied": dict(sorted(report.satisfied.items())),
    }
    return payload, _EXIT_OK


def _cmd_bq_scan(args) -> tuple[dict, int]:
    if args.config:
        grid = ballquotient.grid_from_json(_read_json(args.config))
    else:
        grid = ballquotient.ScanGrid()
    overrides = {}
    for key in ("g", "e", "a", "b_offset", "d"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = (value[0], value[1])
    if overrides:
        base = {
            "g": grid.g,
            "e": grid.e,
            "a": grid.a,
            "b_offset": grid.b_offset,
            "d": grid.d,
        }
        grid = ballquotient.ScanGrid(**{**base, **overrides})
    report = ballquotient.scan(grid)
    payload = {
        "command": "bq-scan",
        "grid": ballquotient.grid_to_json(grid),
        "total_points": report.total_points,
        "feasible_count": report.feasible_count,
        "infeasible_count": report.infeasible_count,
        "violation_tallies": dict(report.violation_tallies),
        "witnesses": [
            {"g": g, "e": e, "a": a, "b": b, "d": d}
            for g, e, a, b, d in report.witnesses
        ],
    }
    return payload, _EXIT_OK


def _cmd_pullback(args) -> tuple[dict, int]:
    if (args.name is None) == (args.input is None):
        raise InputFormatError("pullback needs exactly one of --name or --input")
    if args.name is not None:
        arr = gallery_arrangement(args.name)
    else:
        arr = line_arrangement_from_json(_read_json(args.input))
    profile = pullback(arr, args.e)
    return arrangement.profile_to_json(profile), _EXIT_OK


def _cmd_gallery(args) -> tuple[dict, int]:
    emit = _Emitter(args.format, args.decimal_places)
    entries = {}
    for name in GALLERY_NAMES:
        arr = gallery_arrangement(name)
        entries[name] = {
            "d": arr.d,
            "t": {str(k): c for k, c in sorted(arr.t.items())},
            "plane_harbourne": emit.rat(plane_harbourne_constant(arr)),
        }
    return {"command": "gallery", "arrangements": entries}, _EXIT_OK


def _cmd_incidence(args) -> tuple[dict, int]:
    surface_args = [args.g, args.e, args.a, args.b]
    have_surface = all(v is not None for v in surface_args)
    if any(v is not None for v in surface_args) and not have_surface:
        raise InputFormatError("--g/--e/--a/--b must be given together")
    if (args.expected_h is None) == (not have_surface):
        raise InputFormatError("give either --expected-h or all of --g/--e/--a/--b")
    inc = incidence.incidence_from_json(_read_json(args.input))
    if have_surface:
        expected_h = 2 * args.a * args.b - args.a * args.a * args.e
    else:
        expected_h = args.expected_h
    report = incidence.audit(inc, expected_h)
    payload = {
        "command": "incidence-check",
        "d": inc.d,
        "point_count": inc.f0,
        "expected_h": expected_h,
        "passed": report.passed,
        "checks": _checks_json(report),
        "rank": incidence.incidence_rank(inc),
        "t": {str(k): str(c) for k, c in inc.multiplicity_counts().items()},
        "four_curve_condition": (
            incidence.check_four_curve(inc) if inc.d >= 4 else None
        ),
    }
    if have_surface and report.passed:
        from .surface import NumClass, RuledSurface

        profile = incidence.profile_of(
            inc, RuledSurface(args.g, args.e), NumClass(args.a, args.b)
        )
        payload["profile"] = arrangement.profile_to_json(profile)
    return payload, _EXIT_OK if report.passed else _EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
