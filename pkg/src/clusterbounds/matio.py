"""Matrix file formats and machine-readable table output.

Parity-check matrices are read from alist text (first line "n m" with
n columns and m rows, per-column then per-row index sections, 1-based,
zero padding tolerated) or from dense 0/1 text with one row per line.
Tables are written as CSV with '#'-prefixed provenance lines; JSON
output formats floats with 17 significant digits.
"""

from __future__ import annotations

import numpy as np

from . import __version__
from .errors import ValidationError
from .gf2 import BitMatrix


def to_array(m: BitMatrix) -> np.ndarray:
    return np.array(m.to_lists(), dtype=np.uint8).reshape(m.nrows, m.cols)


def from_array(a) -> BitMatrix:
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValidationError("expected a 2-D array")
    return BitMatrix.from_lists([[int(x) & 1 for x in row] for row in a])


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ValidationError(f"alist line {lineno}: expected integers, got {line!r}")


def parse_alist(text: str) -> BitMatrix:
    raw = text.splitlines()
    lines = [(i + 1, ln) for i, ln in enumerate(raw) if ln.strip()]
    if not lines:
        raise ValidationError("alist line 1: empty file")
    header = _ints(lines[0][1], lines[0][0])
    if len(header) != 2 or header[0] <= 0 or header[1] <= 0:
        raise ValidationError(f"alist line {lines[0][0]}: expected 'n m' with positive sizes")
    n, m = header
    if len(lines) < 4:
        raise ValidationError(f"alist line {len(raw)}: truncated file")
    if len(lines) < 4 + n:
        raise ValidationError(f"alist line {lines[-1][0]}: missing column sections")
    col_w = _ints(lines[2][1], lines[2][0])
    if len(col_w) != n:
        raise ValidationError(f"alist line {lines[2][0]}: expected {n} column weights")
    rows = [0] * m
    for c in range(n):
        lineno, ln = lines[4 + c]
        idx = [x for x in _ints(ln, lineno) if x != 0]
        if len(idx) != col_w[c]:
            raise ValidationError(
                f"alist line {lineno}: column {c} lists {len(idx)} rows, declared {col_w[c]}"
            )
        for r in idx:
            if not 1 <= r <= m:
                raise ValidationError(f"alist line {lineno}: row index {r} out of range")
            rows[r - 1] |= 1 << c
    return BitMatrix(tuple(rows), n)


def write_alist(matrix: BitMatrix) -> str:
    m, n = matrix.shape
    cols = [[i + 1 for i in range(m) if (matrix.rows[i] >> c) & 1] for c in range(n)]
    rws = [[c + 1 for c in range(n) if (matrix.rows[i] >> c) & 1] for i in range(m)]
    out = [
        f"{n} {m}",
        f"{max((len(c) for c in cols), default=0)} {max((len(r) for r in rws), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rws),
    ]
    # a lone 0 keeps zero-weight lines non-empty (readers drop the padding)
    out += [" ".join(map(str, c)) if c else "0" for c in cols]
    out += [" ".join(map(str, r)) if r else "0" for r in rws]
    return "\n".join(out) + "\n"


def parse_dense(text: str) -> BitMatrix:
    rows = []
    width = None
    for lineno, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        bits = ln.replace(" ", "")
        if set(bits) - {"0", "1"}:
            raise ValidationError(f"dense line {lineno}: expected only 0/1 entries")
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise ValidationError(f"dense line {lineno}: ragged row width")
        rows.append(sum((1 << j) for j, ch in enumerate(bits) if ch == "1"))
    if width is None:
        raise ValidationError("dense line 1: empty matrix file")
    return BitMatrix(tuple(rows), width)


def write_dense(matrix: BitMatrix) -> str:
    return str(matrix) + "\n"


def read_matrix(path: str, fmt: str = "auto") -> BitMatrix:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read matrix file {path}: {exc}")
    if fmt == "alist":
        return parse_alist(text)
    if fmt == "dense":
        return parse_dense(text)
    if fmt != "auto":
        raise ValidationError(f"unknown matrix format {fmt!r}")
    # alist starts with "n m"; a dense file's first row is all 0/1 digits
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    toks = first.split()
    if len(toks) == 2 and all(t.isdigit() for t in toks) and any(int(t) > 1 for t in toks):
        return parse_alist(text)
    return parse_dense(text)


# -- table output ---------------------------------------------------------


def format_float(x: float) -> str:
    return format(x, ".17g")


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, int):
        return str(v)
    if v is None:
        return "null"
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, dict):
        inner = ", ".join(f"{_json_value(str(k))}: {_json_value(x)}" for k, x in v.items())
        return "{" + inner + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise ValidationError(f"cannot serialize {type(v).__name__} to JSON")


def dump_json(payload: dict, config: dict | None = None) -> str:
    doc = {"tool": "clusterbounds", "version": __version__}
    if config:
        doc["config"] = config
    doc.update(payload)
    return _json_value(doc) + "\n"


def provenance_header(config: dict) -> list[str]:
    items = " ".join(f"{k}={v}" for k, v in config.items())
    return [f"# clusterbounds {__version__}", f"# config: {items}"]


def write_csv(path_or_none, header: list[str], rows: list[list], config: dict) -> str:
    lines = provenance_header(config)
    lines.append(",".join(header))
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, float):
                cells.append(format_float(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    if path_or_none:
        with open(path_or_none, "w") as fh:
            fh.write(text)
    return text


def read_census_csv(path: str) -> dict[str, dict[int, int]]:
    """Parse a census CSV back into per-field count maps."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValidationError("census CSV line 1: empty file")
    header = lines[0].split(",")
    if "m" not in header:
        raise ValidationError("census CSV line 1: missing 'm' column")
    fields: dict[str, dict[int, int]] = {h: {} for h in header if h != "m"}
    for ln in lines[1:]:
        cells = ln.split(",")
        row = dict(zip(header, cells))
        m = int(row["m"])
        for h, table in fields.items():
            table[m] = int(float(row[h]))
    return fields
