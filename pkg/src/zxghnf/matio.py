"""JSON file formats for polynomial and integer matrices."""

import json

from .inthnf import IntMatrix
from .poly import PolyMatrix, matrix


class ParseError(ValueError):
    """Raised when a matrix file does not match the expected format."""


def parse_matrix(data) -> PolyMatrix:
    """Polynomial matrix from the JSON object form.

    Expected shape: {"n": rows, "m": cols, "entries": entries} where
    entries[i][j] is the (i, j) polynomial as a list of decimal
    coefficient strings in ascending degree.  Trailing zero
    coefficients are normalized away on load.
    """
    if not isinstance(data, dict):
        raise ParseError("matrix file must be a JSON object")
    try:
        n, m, entries = data["n"], data["m"], data["entries"]
    except KeyError as exc:
        raise ParseError("missing key: %s" % exc.args[0]) from None
    if not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer")
    if not isinstance(m, int) or m < 0:
        raise ParseError("m must be a nonnegative integer")
    if not isinstance(entries, list) or len(entries) != n:
        raise ParseError("entries must be a list of %d rows" % n)
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != m:
            raise ParseError("row %d must have %d entries" % (i + 1, m))
        parsed = []
        for j, poly in enumerate(row):
            if not isinstance(poly, list):
                raise ParseError(
                    "entry (%d, %d) must be a coefficient list" % (i + 1, j + 1)
                )
            coeffs = []
            for s in poly:
                if not isinstance(s, str):
                    raise ParseError(
                        "entry (%d, %d) has a non-string coefficient"
                        % (i + 1, j + 1)
                    )
                try:
                    coeffs.append(int(s, 10))
                except ValueError:
                    raise ParseError(
                        "entry (%d, %d) has a non-decimal coefficient %r"
                        % (i + 1, j + 1, s)
                    ) from None
            parsed.append(coeffs)
        rows.append(parsed)
    cols = [[rows[i][j] for i in range(n)] for j in range(m)]
    return matrix(n, cols)


def emit_matrix(F: PolyMatrix) -> dict:
    """JSON object form of a polynomial matrix; zero entries become ["0"]."""
    entries = []
    for i in range(F.n):
        row = []
        for c in F.cols:
            p = c[i]
            row.append([str(cf) for cf in p] if p else ["0"])
        entries.append(row)
    return {"n": F.n, "m": F.width(), "entries": entries}


def load_matrix(path) -> PolyMatrix:
    """Read a polynomial matrix file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc) from None
    return parse_matrix(data)


def save_matrix(path, F: PolyMatrix):
    """Write a polynomial matrix file."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(emit_matrix(F), fh, indent=1)
        fh.write("\n")


def parse_int_matrix(data) -> IntMatrix:
    """Integer matrix from {"rows": r, "cols": c, "entries": r x c ints}."""
    if not isinstance(data, dict):
        raise ParseError("matrix file must be a JSON object")
    try:
        r, c, entries = data["rows"], data["cols"], data["entries"]
    except KeyError as exc:
        raise ParseError("missing key: %s" % exc.args[0]) from None
    if not isinstance(r, int) or r < 1:
        raise ParseError("rows must be a positive integer")
    if not isinstance(c, int) or c < 0:
        raise ParseError("cols must be a nonnegative integer")
    if not isinstance(entries, list) or len(entries) != r:
        raise ParseError("entries must be a list of %d rows" % r)
    out = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != c:
            raise ParseError("row %d must have %d entries" % (i + 1, c))
        vals = []
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError("row %d has a non-integer entry" % (i + 1))
            vals.append(v)
        out.append(tuple(vals))
    return IntMatrix(r, c, tuple(out))


def emit_int_matrix(A: IntMatrix) -> dict:
    """JSON object form of an integer matrix."""
    return {
        "rows": A.rows,
        "cols": A.cols,
        "entries": [list(r) for r in A.entries],
    }


def load_int_matrix(path) -> IntMatrix:
    """Read an integer matrix file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc) from None
    return parse_int_matrix(data)


def save_int_matrix(path, A: IntMatrix):
    """Write an integer matrix file."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(emit_int_matrix(A), fh, indent=1)
        fh.write("\n")
