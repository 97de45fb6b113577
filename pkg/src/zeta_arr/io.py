"""JSON input parsing and canonical output."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .fields import PrimeField, Rationals
from .matroid import Matroid
from .realization import Arrangement


def dumps(obj) -> str:
    """Canonical JSON text: fixed key order as built, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def parse_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def _entry(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"matrix entries must be integers or rational strings, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational entry {x!r}") from exc
    raise ParseError(f"bad matrix entry {x!r}")


def matroid_from_json(obj) -> Matroid:
    if not isinstance(obj, dict):
        raise ParseError("matroid input must be a JSON object")
    try:
        n = _int(obj["n"], "n")
        d = _int(obj["d"], "d")
        bases = obj["bases"]
    except KeyError as exc:
        raise ParseError(f"matroid input is missing {exc.args[0]!r}") from exc
    if not isinstance(bases, list) or not all(isinstance(B, list) for B in bases):
        raise ParseError("bases must be a list of lists")
    return Matroid(n, d, [[_int(e, "basis element") for e in B] for B in bases])


def arrangement_from_json(obj) -> Arrangement:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ParseError("arrangement input needs a 'matrix'")
    field_doc = obj.get("field", "Q")
    if field_doc == "Q":
        field = Rationals()
    elif isinstance(field_doc, dict) and set(field_doc) == {"p"}:
        field = PrimeField(_int(field_doc["p"], "p"))
    else:
        raise ParseError(f"field must be \"Q\" or {{\"p\": int}}, got {field_doc!r}")
    rows = obj["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a nonempty list of rows")
    return Arrangement([[_entry(x) for x in r] for r in rows], field)


def load_input(path: str | Path) -> Matroid | Arrangement:
    """Read a matroid (``bases``) or arrangement (``matrix``) JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    obj = parse_json(text, str(path))
    if isinstance(obj, dict) and "matrix" in obj:
        return arrangement_from_json(obj)
    if isinstance(obj, dict) and "bases" in obj:
        return matroid_from_json(obj)
    raise ParseError(f"{path}: expected a matroid (bases) or an arrangement (matrix)")
