"""Rendering of tables as Markdown, CSV and JSON.

Output is deterministic: rows keep their computed order and JSON keys are
written in a fixed order.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from typing import Sequence

from .counting import CountRow, exceptions
from .qpoly import QPoly, format_factored, format_poly
from .weyl import display_name, weyl_group

FORMATS = ("md", "csv", "json")


def load_schema() -> dict:
    return json.loads(resources.files("cubicsurf").joinpath("table.schema.json").read_text())


def _json_key(key):
    if isinstance(key, QPoly):
        return format_poly(key)
    return key


def _coeffs(p: QPoly) -> list[int]:
    return p.padded(max(p.degree + 1, 5)) if p.is_integral() else [str(c) for c in p.coeffs]


def row_records(rows: Sequence[CountRow], table_id: str, atlas_names: bool = False) -> list[dict]:
    G = weyl_group()
    out = []
    for r in rows:
        rec = {
            "key": _json_key(r.key),
            "weight": r.weight,
            "poly": _coeffs(r.value),
            "factored": format_factored(r.value),
            "classes": [display_name(n) for n in r.classes],
        }
        if isinstance(r.key, QPoly):
            rec["key_poly"] = _coeffs(r.key)
        if table_id == "1":
            rec["key"] = display_name(r.key)
            rec["vanishes_at"] = exceptions(r.key)
            if atlas_names:
                row = G.class_by_name(r.key).table_row
                rec["atlas"] = row.atlas if row else ""
        out.append(rec)
    return out


_KEY_LABELS = {"1": "class", "2": "t", "3": "N", "4": "uconf2"}


def render_rows(rows: Sequence[CountRow], table_id: str, fmt: str, atlas_names: bool = False,
                key_label: str | None = None) -> str:
    recs = row_records(rows, table_id, atlas_names)
    key_label = key_label or _KEY_LABELS.get(table_id, "key")
    if fmt == "json":
        body = {"table": table_id, "rows": recs}
        return json.dumps(body, indent=2) + "\n"
    width = max(len(r["poly"]) for r in recs) if recs else 5
    extra = []
    if table_id == "1":
        extra = ["vanishes_at"] + (["atlas"] if atlas_names else [])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([key_label, "weight", "factored"] + [f"c{i}" for i in range(width)] + extra)
        for r in recs:
            coeffs = list(r["poly"]) + [0] * (width - len(r["poly"]))
            ex = []
            if table_id == "1":
                ex = [" ".join(map(str, r["vanishes_at"]))] + ([r["atlas"]] if atlas_names else [])
            w.writerow([r["key"], r["weight"], r["factored"]] + coeffs + ex)
        return buf.getvalue()
    if fmt == "md":
        head = [key_label, "weight", "polynomial", "coefficients [c0..]"] + extra
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        for r in recs:
            cells = [str(r["key"]), str(r["weight"]), r["factored"], str(r["poly"])]
            if table_id == "1":
                cells.append(", ".join(map(str, r["vanishes_at"])))
                if atlas_names:
                    cells.append(r["atlas"])
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_records(records: list[dict], fmt: str, title: str) -> str:
    """Generic rendering of flat records (class table, character table)."""
    if fmt == "json":
        return json.dumps({"table": title, "rows": records}, indent=2) + "\n"
    cols = list(records[0]) if records else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in records:
            w.writerow([" ".join(map(str, v)) if isinstance(v, list) else v for v in r.values()])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in records:
            lines.append("| " + " | ".join(str(v) for v in r.values()) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
