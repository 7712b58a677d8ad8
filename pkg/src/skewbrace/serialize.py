"""File formats: Cayley-table files and census report files.

Both formats are JSON, UTF-8, all integers decimal, with deterministic
byte-for-byte output so golden fixtures diff cleanly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .analysis import HgsReport
from .errors import ParseError
from .groups import FiniteGroup, make_group


def group_to_text(G: FiniteGroup) -> str:
    rows = ",\n".join(f"    [{', '.join(map(str, row))}]" for row in G.table)
    return (
        "{\n"
        f'  "order": {G.order},\n'
        '  "table": [\n'
        f"{rows}\n"
        "  ]\n"
        "}\n"
    )


def write_group(G: FiniteGroup, path) -> None:
    Path(path).write_text(group_to_text(G), encoding="utf-8")


def group_from_text(text: str) -> FiniteGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) \
            from exc
    if not isinstance(data, dict) or "order" not in data or "table" not in data:
        raise ParseError('expected an object with "order" and "table" fields')
    order, table = data["order"], data["table"]
    if not isinstance(order, int) or isinstance(order, bool):
        raise ParseError('"order" must be an integer')
    if not isinstance(table, list) or len(table) != order:
        raise ParseError(f'"table" must have {order} rows')
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise ParseError(f"table row {i} must have {order} entries")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"table row {i} has a non-integer entry")
    return make_group(table)


def read_group(path) -> FiniteGroup:
    return group_from_text(Path(path).read_text(encoding="utf-8"))


def report_to_record(r: HgsReport) -> dict:
    return {
        "operation_table": [list(row) for row in r.operation.table],
        "type_name": r.type_name,
        "is_bi_skew": r.is_bi_skew,
        "image": [list(s) for s in r.image],
        "is_surjective": r.is_surjective,
        "gc_ratio": {"num": r.gc_ratio.numerator,
                     "den": r.gc_ratio.denominator},
        "grouplikes": list(r.grouplikes),
        "iso_class_id": r.iso_class_id,
        "orbit_size": r.orbit_size,
    }


def reports_to_text(reports) -> str:
    records = [report_to_record(r) if isinstance(r, HgsReport) else r
               for r in reports]
    records.sort(key=lambda rec: rec["operation_table"])
    return json.dumps(records, indent=2, sort_keys=True) + "\n"


def write_reports(reports, path) -> None:
    Path(path).write_text(reports_to_text(reports), encoding="utf-8")


def read_reports(path) -> list[dict]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) \
            from exc
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of report records")
    return data


def record_ratio(record: dict) -> Fraction:
    return Fraction(record["gc_ratio"]["num"], record["gc_ratio"]["den"])
