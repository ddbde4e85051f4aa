"""Reading and writing matrices: CSV (grid or upper-triangle listing) and JSON.

CSV accepts two layouts, auto-detected:

  * a full square grid, one row per line::

        1, 2, 2
        0.5, 1, 2
        0.5, 0.5, 1

  * an upper-triangle listing of ``i, j, value`` with 1-based integer
    indices i < j::

        1, 2, 2
        1, 3, 2
        2, 3, 2

Blank lines and ``#`` comments are ignored. A line only counts as a triangle
entry when its first two fields are bare integers with i < j; a valid square
grid can never look like that (its second row starts with a reciprocal and a
1), so the two layouts cannot collide. Grids are validated with a looser
reciprocity tolerance (1e-6) to forgive rounded text, then exact reciprocity
is re-imposed from the upper triangle.

JSON uses ``{"n": N, "entries": [[...n rows...]]}``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .matrix import MatrixValidationError, PCMatrix, make_matrix
from .spectral import RITable

#: reciprocity/diagonal tolerance for text inputs (files round-trip at 15
#: significant digits, so anything near 1e-6 is a real data problem)
TEXT_RTOL = 1e-6

_INT_FIELD = re.compile(r"^\d+$")


@dataclass(frozen=True)
class MatrixDocument:
    """A matrix plus optional free-text metadata carried by JSON files."""

    matrix: PCMatrix
    name: str | None = None
    description: str | None = None


def _data_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_float(field: str, where: str) -> float:
    try:
        value = float(field)
    except ValueError:
        raise MatrixValidationError("bad_value", f"{where}: {field!r} is not a number") from None
    if not math.isfinite(value):
        raise MatrixValidationError("bad_value", f"{where}: {field!r} is not finite")
    return value


def _looks_like_triangle(rows: list[list[str]]) -> bool:
    for row in rows:
        if len(row) != 3:
            return False
        i_field, j_field = row[0], row[1]
        if not (_INT_FIELD.match(i_field) and _INT_FIELD.match(j_field)):
            return False
        if not (1 <= int(i_field) < int(j_field)):
            return False
    return True


def parse_csv(text: str, rtol: float = TEXT_RTOL) -> PCMatrix:
    """Parse CSV text in either layout into a matrix."""
    lines = _data_lines(text)
    if not lines:
        raise MatrixValidationError("empty_input", "no data lines found")
    rows = [[field.strip() for field in line.split(",")] for line in lines]
    if _looks_like_triangle(rows):
        pairs = []
        for idx, (i_field, j_field, v_field) in enumerate(rows, start=1):
            value = _parse_float(v_field, f"line {idx}")
            pairs.append((int(i_field), int(j_field), value))
        return make_matrix(pairs)
    grid = [
        [_parse_float(field, f"line {idx}") for field in row]
        for idx, row in enumerate(rows, start=1)
    ]
    return PCMatrix.from_grid(grid, rtol=rtol)


def format_csv(matrix: PCMatrix) -> str:
    """Full-grid CSV at 15 significant digits (round-trips well under 1e-12)."""
    return "\n".join(",".join(f"{v:.15g}" for v in row) for row in matrix.to_rows()) + "\n"


def matrix_to_dict(matrix: PCMatrix) -> dict[str, Any]:
    return {"n": matrix.n, "entries": matrix.to_rows()}


def matrix_from_dict(data: Any, rtol: float = TEXT_RTOL) -> PCMatrix:
    """Build a matrix from the JSON object form {"n": N, "entries": [[...]]}."""
    if not isinstance(data, dict):
        raise MatrixValidationError("bad_document", f"expected an object, got {type(data).__name__}")
    if "entries" not in data:
        raise MatrixValidationError("bad_document", 'missing "entries"')
    entries = data["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise MatrixValidationError("bad_document", '"entries" must be a list of rows')
    for row in entries:
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise MatrixValidationError("bad_value", f"entry {v!r} is not a number")
    if "n" in data:
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise MatrixValidationError("bad_document", f'"n" must be an integer, got {n!r}')
        if n != len(entries):
            raise MatrixValidationError(
                "bad_document", f'"n" is {n} but entries has {len(entries)} rows'
            )
    return PCMatrix.from_grid(entries, rtol=rtol)


def document_from_json(text: str, rtol: float = TEXT_RTOL) -> MatrixDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixValidationError("bad_json", f"invalid JSON: {exc}") from None
    matrix = matrix_from_dict(data, rtol=rtol)
    name = data.get("name")
    description = data.get("description")
    if name is not None and not isinstance(name, str):
        raise MatrixValidationError("bad_document", '"name" must be a string')
    if description is not None and not isinstance(description, str):
        raise MatrixValidationError("bad_document", '"description" must be a string')
    return MatrixDocument(matrix=matrix, name=name, description=description)


def document_to_json(doc: MatrixDocument, indent: int | None = 2) -> str:
    data: dict[str, Any] = matrix_to_dict(doc.matrix)
    if doc.name is not None:
        data["name"] = doc.name
    if doc.description is not None:
        data["description"] = doc.description
    return json.dumps(data, indent=indent)


def load_matrix(path: str | Path) -> MatrixDocument:
    """Load a matrix file, picking the format from the extension (.json or CSV)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return document_from_json(text)
    return MatrixDocument(matrix=parse_csv(text))


def save_matrix(matrix: PCMatrix, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(document_to_json(MatrixDocument(matrix)) + "\n")
    else:
        path.write_text(format_csv(matrix))


def ri_table_from_json(text: str) -> RITable:
    """Parse a random-index table from JSON like {"3": 0.5245, "4": 0.882}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON for RI table: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("RI table JSON must be an object of n -> value")
    values = {}
    for key, value in data.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"RI table key {key!r} is not an integer") from None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"RI value for n={n} must be a number, got {value!r}")
        values[n] = float(value)
    return RITable(values)


def load_ri_table(path: str | Path) -> RITable:
    return ri_table_from_json(Path(path).read_text())
