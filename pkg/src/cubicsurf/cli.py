"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction

from . import data
from .chars import load_character_table
from .counting import (
    FLAVORS,
    absolute_count,
    class_count_poly,
    marking_distribution,
    table1,
    table2,
    table3,
    table4,
)
from .qpoly import format_factored, format_poly
from .report import FORMATS, render_records, render_rows
from .weyl import display_name, weyl_group

log = logging.getLogger("cubicsurf")

TABLES = {"1": table1, "2": table2, "3": table3, "4": table4}
MARKINGS = ("lines", "tritangents", "double-sixes", "points", "uconf2")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _out(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


# ---------------------------------------------------------------------------


def cmd_tables(args) -> int:
    rows = TABLES[args.which]()
    _out(render_rows(rows, args.which, args.format, atlas_names=args.atlas_names))
    return 0


def _parse_corruption(text: str) -> dict:
    m = re.fullmatch(r"(\w+):(.+)=(-?\d+)", text)
    if not m:
        raise UsageError(f"--corrupt expects IRREP:CLASS=VALUE, got {text!r}")
    irrep, cls, value = m.group(1), m.group(2).strip("()"), int(m.group(3))
    if irrep not in data.BASE_IRREPS:
        raise UsageError(f"unknown irreducible {irrep!r}; expected one of {data.BASE_IRREPS}")
    if cls not in data.CHARACTER_VALUES:
        raise UsageError(f"unknown class {cls!r}")
    values = {k: list(v) for k, v in data.CHARACTER_VALUES.items()}
    values[cls][data.BASE_IRREPS.index(irrep)] = value
    return values


def cmd_verify(args) -> int:
    from .verify import run_checks

    values = _parse_corruption(args.corrupt) if args.corrupt else None
    results = run_checks(values, only=args.only)
    if args.format == "json":
        body = [{"id": r.id, "description": r.description, "ok": r.ok, "detail": r.detail} for r in results]
        _out(json.dumps({"checks": body, "result": "PASS" if all(r.ok for r in results) else "FAIL"}, indent=2))
    else:
        for r in results:
            _out(r.line())
    failed = [r.id for r in results if not r.ok]
    if failed:
        _out(f"FAIL: {len(failed)}/{len(results)} checks failed ({', '.join(failed)})")
        return 1
    _out(f"PASS: {len(results)}/{len(results)} checks")
    return 0


def cmd_census(args) -> int:
    from .oracle.census import census

    if args.q != 2:
        raise UsageError(f"census is only available for q = 2 (got q = {args.q})")
    if not 1 <= args.smooth_depth <= 6:
        raise UsageError("--smooth-depth must be between 1 and 6")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    try:
        report = census(args.q, jobs=args.jobs, depth=args.smooth_depth, sample_members=args.sample,
                        seed=args.seed)
    except MemoryError:
        _out("FAIL census: out of memory")
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json() + "\n")
    else:
        _out(report.to_json())
    _out(report.status_line())
    return 0 if report.passed else 1


def _parse_form(text: str) -> int:
    from .oracle.forms import N_MONOMIALS, from_coefficients, from_hex

    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if len(parts) == 1 and len(parts[0]) != N_MONOMIALS:
        v = from_hex(parts[0].removeprefix("0x"))
    elif len(parts) == 1:
        v = from_coefficients(list(parts[0]))
    else:
        v = from_coefficients(parts)
    if v == 0:
        raise ValueError("the zero form does not define a surface")
    return v


def cmd_classify(args) -> int:
    from .oracle.census import MAX_K, classify_form
    from .oracle.forms import format_form, to_hex

    if args.q != 2:
        raise UsageError("classification is only available over F_2")
    try:
        v = _parse_form(" ".join(args.coeffs))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = classify_form(v, args.smooth_depth)
    out = {"form": to_hex(v), "equation": format_form(v), "smooth": res.smooth}
    if res.smooth:
        c = weyl_group().class_by_name(res.cls)
        out.update(
            cls=display_name(c.name),
            counts={f"n{k}": n for k, n in zip(range(1, MAX_K + 1), res.counts)},
            rational_lines=res.rational_lines,
            class_size=c.size,
            order=c.order,
        )
        if args.atlas_names and c.table_row:
            out["atlas"] = c.table_row.atlas
    if args.format == "json":
        _out(json.dumps(out, indent=2))
    else:
        lines = [f"form: {out['form']}  ({out['equation']})"]
        if not res.smooth:
            lines.append("verdict: singular")
        else:
            lines += [
                "verdict: smooth",
                f"class: {out['cls']}" + (f"  [{out['atlas']}]" if "atlas" in out else ""),
                "counts: " + " ".join(f"{k}={n}" for k, n in out["counts"].items()),
                f"rational lines: {out['rational_lines']}",
                f"#c: {out['class_size']}  order: {out['order']}",
            ]
        _out("\n".join(lines))
    return 0


def _parse_fiber(text: str | None):
    if not text:
        return None
    m = re.fullmatch(r"([a-z]+):(\d+)", text)
    if not m or m.group(1) not in FLAVORS:
        raise UsageError(f"--fiber expects FLAVOR:N with FLAVOR in {FLAVORS}, got {text!r}")
    return m.group(1), int(m.group(2))


def cmd_distribution(args) -> int:
    fiber = _parse_fiber(args.fiber)
    if args.marking in ("points", "uconf2"):
        if fiber:
            raise UsageError("--fiber applies only to lines, tritangents and double-sixes")
        rows = table2() if args.marking == "points" else table4()
        _out(render_rows(rows, "2" if args.marking == "points" else "4", args.format))
        return 0
    marking = args.marking.replace("-", "_")
    rows = marking_distribution(marking, fiber)
    if args.marking == "double-sixes" and fiber is None:
        # Burnside over the group (not over X(F_q), where V15,2 in H^3 spoils it)
        G = weyl_group()
        avg = sum(Fraction(c.size, G.order) * G.fixed_points(c, "double_sixes") for c in G.classes)
        if avg != 1:
            _out(f"FAIL: Burnside average of fixed double sixes is {avg}, not 1")
            return 1
    label = "d" if fiber is None else "d*#F"
    _out(render_rows(rows, f"distribution:{args.marking}", args.format, key_label=label))
    return 0


def cmd_classes(args) -> int:
    G = weyl_group()
    recs = []
    for c in G.classes:
        rec = {
            "class": display_name(c.name),
            "size": c.size,
            "order": c.order,
            "parity": c.parity,
            "trace_V6": c.trace_V6,
            "charpoly_V6": format_poly(c.char_poly_V6, var="x"),
            "fixed_lines": c.fixed["lines"],
            "fixed_tritangents": c.fixed["tritangents"],
            "fixed_double_sixes": c.fixed["double_sixes"],
            "count": format_factored(class_count_poly(c)),
            "count_at_2": absolute_count(c, 2),
        }
        if args.atlas_names:
            rec["atlas"] = c.table_row.atlas if c.table_row else ""
        recs.append(rec)
    _out(render_records(recs, args.format, "classes"))
    return 0


def cmd_chars(args) -> int:
    G = weyl_group()
    T = load_character_table()
    recs = []
    for name in T.names:
        rec = {"irrep": name}
        for c, v in zip(G.classes, T[name].values):
            rec[display_name(c.name)] = int(v) if Fraction(v).denominator == 1 else str(v)
        recs.append(rec)
    _out(render_records(recs, args.format, "characters"))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="md")
    fmt.add_argument("--atlas-names", action="store_true", help="add Atlas class names")

    p = _Parser(prog="cubicsurf", description="Cubic surfaces over finite fields by Frobenius class.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tables", parents=[fmt], help="regenerate a counting table")
    s.add_argument("which", choices=sorted(TABLES))
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("verify", help="run all invariant checks")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--only", action="append", metavar="PREFIX", help="run checks whose id starts with PREFIX")
    s.add_argument("--corrupt", metavar="IRREP:CLASS=VALUE", help="overwrite one character value (testing)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", help="exhaustive census over F_2")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--smooth-depth", type=int, default=6)
    s.add_argument("--sample", type=int, default=1000, help="non-representative forms to re-check")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("classify", help="classify one cubic form over F_2")
    s.add_argument("coeffs", nargs="+", help="5 hex digits, or 20 coefficients in monomial order")
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--smooth-depth", type=int, default=6)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--atlas-names", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("distribution", parents=[fmt], help="distribution of a marking over X(F_q)")
    s.add_argument("marking", choices=MARKINGS)
    s.add_argument("--fiber", metavar="FLAVOR:N", help="weight by a configuration count, e.g. uconf:2")
    s.set_defaults(func=cmd_distribution)

    s = sub.add_parser("classes", parents=[fmt], help="conjugacy classes with their data")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("chars", parents=[fmt], help="character table")
    s.set_defaults(func=cmd_chars)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
