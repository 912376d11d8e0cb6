"""Knot tables: JSON arrays of named Seifert matrices."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import InvalidSeifertMatrix, SliceEngineError
from .knot import SeifertMatrix


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert_matrix: SeifertMatrix
    metadata: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class BadRecord:
    """A table entry that failed validation; kept so batch runs can report it in place."""

    name: str
    error: str


def _json_int(v) -> int:
    # big integers may be given as strings
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected an integer, got {v!r}")
    return int(v)


def _parse_record(raw, index: int) -> KnotRecord:
    if not isinstance(raw, dict) or "seifert_matrix" not in raw:
        raise InvalidSeifertMatrix(f"record {index} needs a 'seifert_matrix' field")
    rows = raw["seifert_matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvalidSeifertMatrix(f"record {index}: 'seifert_matrix' must be a list of rows")
    try:
        matrix = [[_json_int(v) for v in r] for r in rows]
    except ValueError as exc:
        raise InvalidSeifertMatrix(f"record {index}: {exc}") from exc
    meta = {k: raw[k] for k in ("crossing_number", "source") if k in raw}
    return KnotRecord(str(raw.get("name", f"#{index}")), SeifertMatrix(matrix), meta)


def parse_knot_table(text: str, strict: bool = True) -> list[KnotRecord | BadRecord]:
    """Parse a knot table; with ``strict=False`` invalid entries become :class:`BadRecord`."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise SliceEngineError("knot table must be a JSON array")
    out: list[KnotRecord | BadRecord] = []
    for i, raw in enumerate(data):
        try:
            out.append(_parse_record(raw, i))
        except SliceEngineError as exc:
            if strict:
                raise
            name = raw.get("name", f"#{i}") if isinstance(raw, dict) else f"#{i}"
            out.append(BadRecord(str(name), str(exc)))
    return out


def load_knot_table(path: str | Path | None = None, strict: bool = True) -> list[KnotRecord | BadRecord]:
    """Load a knot table from ``path``, or the bundled corpus when ``path`` is None."""
    if path is None:
        text = resources.files("simpleslice").joinpath("data/knots.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_knot_table(text, strict=strict)


def get_knot(name: str, path: str | Path | None = None) -> SeifertMatrix:
    """Seifert matrix of a named knot from a table (bundled corpus by default)."""
    for rec in load_knot_table(path):
        if rec.name == name:
            return rec.seifert_matrix
    raise KeyError(f"no knot named {name!r}")
