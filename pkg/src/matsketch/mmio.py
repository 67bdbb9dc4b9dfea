"""Matrix file I/O: MatrixMarket (array and coordinate, real general)
and headerless CSV.

Parsers are line-oriented so every malformed token can be reported with
its line number; that is the reason these are written out by hand
instead of delegating to a library reader.
"""

import math
from pathlib import Path

import numpy as np

from .errors import ArgumentError, DataFormatError

_MM_MAGIC = "%%MatrixMarket"


def _real(tok, path, lineno):
    try:
        v = float(tok)
    except ValueError:
        raise DataFormatError(f"{path}:{lineno}: not a real number: {tok!r}") from None
    if not math.isfinite(v):
        raise DataFormatError(f"{path}:{lineno}: non-finite value: {tok!r}")
    return v


def _int(tok, path, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise DataFormatError(f"{path}:{lineno}: bad {what}: {tok!r}") from None


def _parse_matrixmarket(text, path):
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_MM_MAGIC):
        raise DataFormatError(f"{path}:1: missing {_MM_MAGIC} header")
    toks = lines[0].split()
    if len(toks) != 5 or toks[1].lower() != "matrix":
        raise DataFormatError(f"{path}:1: malformed header: {lines[0]!r}")
    layout, field, symmetry = (t.lower() for t in toks[2:])
    if layout not in ("array", "coordinate"):
        raise DataFormatError(f"{path}:1: unsupported layout {layout!r}")
    if field != "real":
        raise DataFormatError(f"{path}:1: only 'real' entries supported, got {field!r}")
    if symmetry != "general":
        raise DataFormatError(
            f"{path}:1: only 'general' symmetry supported, got {symmetry!r}")

    body = [(i + 1, ln) for i, ln in enumerate(lines)
            if i > 0 and ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise DataFormatError(f"{path}: missing size line")
    size_no, size_ln = body[0]
    entries = body[1:]
    size_toks = size_ln.split()

    if layout == "array":
        if len(size_toks) != 2:
            raise DataFormatError(
                f"{path}:{size_no}: array size line needs 'rows cols', got {size_ln!r}")
        m = _int(size_toks[0], path, size_no, "row count")
        n = _int(size_toks[1], path, size_no, "column count")
        if m < 1 or n < 1:
            raise DataFormatError(f"{path}:{size_no}: dimensions must be positive")
        vals = []
        for no, ln in entries:
            vals.extend(_real(t, path, no) for t in ln.split())
        if len(vals) != m * n:
            raise DataFormatError(
                f"{path}: array body has {len(vals)} entries, expected {m * n}")
        # values run down each column in turn
        return np.array(vals).reshape((n, m)).T.copy()

    if len(size_toks) != 3:
        raise DataFormatError(
            f"{path}:{size_no}: coordinate size line needs 'rows cols nnz', "
            f"got {size_ln!r}")
    m = _int(size_toks[0], path, size_no, "row count")
    n = _int(size_toks[1], path, size_no, "column count")
    nnz = _int(size_toks[2], path, size_no, "entry count")
    if m < 1 or n < 1 or nnz < 0:
        raise DataFormatError(f"{path}:{size_no}: bad dimensions/entry count")
    if len(entries) != nnz:
        raise DataFormatError(
            f"{path}: coordinate body has {len(entries)} entries, expected {nnz}")
    A = np.zeros((m, n))
    for no, ln in entries:
        parts = ln.split()
        if len(parts) != 3:
            raise DataFormatError(
                f"{path}:{no}: coordinate entry needs 'i j value', got {ln!r}")
        i = _int(parts[0], path, no, "row index")
        j = _int(parts[1], path, no, "column index")
        if not (1 <= i <= m and 1 <= j <= n):
            raise DataFormatError(
                f"{path}:{no}: index ({i},{j}) outside {m}x{n}")
        A[i - 1, j - 1] += _real(parts[2], path, no)
    return A


def _parse_csv(text, path):
    rows = []
    width = None
    for no, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip():
            continue
        fields = ln.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise DataFormatError(
                f"{path}:{no}: expected {width} fields, got {len(fields)}")
        rows.append([_real(t.strip(), path, no) for t in fields])
    if not rows:
        raise DataFormatError(f"{path}: no data rows")
    return np.array(rows)


def load_matrix(path, format="auto"):
    """Read a dense matrix from MatrixMarket or headerless CSV."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise DataFormatError(f"cannot read {path}: {e}") from None
    fmt = format
    if fmt == "auto":
        if text.lstrip().startswith(_MM_MAGIC) or p.suffix.lower() in (".mtx", ".mm"):
            fmt = "matrixmarket"
        else:
            fmt = "csv"
    if fmt == "matrixmarket":
        return _parse_matrixmarket(text, path)
    if fmt == "csv":
        return _parse_csv(text, path)
    raise ArgumentError(
        f"unknown format {format!r} (expected auto|matrixmarket|csv)")


def save_matrix(path, A, format="matrixmarket"):
    """Write a dense matrix; values round-trip bit-identically."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    m, n = A.shape
    if format == "matrixmarket":
        out = [f"{_MM_MAGIC} matrix array real general", f"{m} {n}"]
        out.extend(repr(float(A[i, j])) for j in range(n) for i in range(m))
        Path(path).write_text("\n".join(out) + "\n")
    elif format == "csv":
        out = [",".join(repr(float(v)) for v in row) for row in A]
        Path(path).write_text("\n".join(out) + "\n")
    else:
        raise ArgumentError(
            f"unknown format {format!r} (expected matrixmarket|csv)")
