"""Record rendering for the command line: JSON lines, CSV and a human table."""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from importlib import resources

from .polynomial import RhoPolynomial

SCHEMA_VERSION = "connasym.output/1"
DEFAULT_DIGITS = 12


def exact_str(x) -> str:
    """Lossless string: ``"251/256"``, ``"-3"`` or a polynomial in ``rho``."""
    if isinstance(x, RhoPolynomial):
        return x.format("rho")
    return str(Fraction(x))


def decimal_str(x, digits: int = DEFAULT_DIGITS) -> str:
    """Rounded decimal rendering (round-half-even, ``digits`` significant digits).

    For display only; never parse it back for further computation.
    """
    x = Fraction(x)
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    return format(ctx.divide(Decimal(x.numerator), Decimal(x.denominator)), "g")


def load_schema() -> dict:
    text = resources.files("connasym").joinpath("schema/output.schema.json").read_text()
    return json.loads(text)


def make_record(command: str, params: dict, row: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "params": params, "row": row}


def render(records: list[dict], columns: list[str], fmt: str) -> str:
    """Serialise records.  ``columns`` fixes the CSV/human column order."""
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in records:
            w.writerow([_cell(r["row"].get(c, "")) for c in columns])
        return buf.getvalue()
    if fmt == "human":
        rows = [[_human(r["row"].get(c, "")) for c in columns] for r in records]
        widths = [max([len(c)] + [len(row[j]) for row in rows]) for j, c in enumerate(columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _human(v) -> str:
    s = _cell(v)
    return s.replace("rho", "ρ") if isinstance(v, str) else s
