"""Text file formats.

Subspace::

    q N r
    <r lines of N space-separated digits: the RREF basis>

A subspace list is a sequence of such blocks separated by blank lines.
A message file holds k integer-encoded field elements, one per line. A
linearized polynomial is one line of integer-encoded coefficients, lowest
q-degree first. Trial logs are CSV with :data:`TRIAL_LOG_COLUMNS`.
"""

from __future__ import annotations

import csv
import io
import os
import tempfile
from collections.abc import Iterable, Sequence
from pathlib import Path

from .errors import ParseError
from .field import GF
from .linearized import LinearizedPoly
from .subspace import Subspace, rref

TRIAL_LOG_COLUMNS = ("seed", "rho_target", "t_target", "rho_actual", "t_actual", "distance", "decode_ok")


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line.strip()!r}", lineno) from None


def format_subspace(space: Subspace) -> str:
    lines = [f"{space.q} {space.n} {space.dim}"]
    lines += [" ".join(str(x) for x in row) for row in space.basis]
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, str]]) -> Subspace:
    lineno, header = lines[0]
    fields = _ints(header, lineno)
    if len(fields) != 3:
        raise ParseError("header must be 'q N r'", lineno)
    q, n, r = fields
    if q < 2 or n < 0 or r < 0 or r > n:
        raise ParseError(f"invalid header values q={q} N={n} r={r}", lineno)
    body = lines[1:]
    if len(body) != r:
        raise ParseError(f"expected {r} basis rows, found {len(body)}", lineno)
    rows = []
    for ln, text in body:
        row = _ints(text, ln)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", ln)
        if any(not 0 <= x < q for x in row):
            raise ParseError(f"entries must lie in [0, {q})", ln)
        rows.append(tuple(row))
    reduced, _ = rref(rows, q)
    if len(reduced) != r or [tuple(x) for x in reduced] != rows:
        raise ParseError("basis is not a full-rank matrix in reduced row echelon form", lineno)
    return Subspace(q, n, tuple(rows))


def _blocks(text: str) -> list[list[tuple[int, str]]]:
    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for i, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            current.append((i, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def parse_subspace(text: str) -> Subspace:
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one subspace block, found {len(blocks)}")
    return _parse_block(blocks[0])


def format_subspace_list(spaces: Iterable[Subspace]) -> str:
    return "\n".join(format_subspace(s) for s in spaces)


def parse_subspace_list(text: str) -> list[Subspace]:
    return [_parse_block(b) for b in _blocks(text)]


def format_message(msg: Sequence[int]) -> str:
    return "".join(f"{int(u)}\n" for u in msg)


def parse_message(text: str, k: int | None = None, order: int | None = None) -> tuple[int, ...]:
    """Read one integer per nonblank line; optionally check length and range."""
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        vals = _ints(line, i)
        if len(vals) != 1:
            raise ParseError("expected one field element per line", i)
        if order is not None and not 0 <= vals[0] < order:
            raise ParseError(f"{vals[0]} is not a field element in [0, {order})", i)
        out.append(vals[0])
    if k is not None and len(out) != k:
        raise ParseError(f"message has {len(out)} symbols, expected {k}")
    return tuple(out)


def format_polynomial(poly: LinearizedPoly) -> str:
    return " ".join(str(c) for c in poly.coeffs) + "\n"


def parse_polynomial(text: str, field: GF) -> LinearizedPoly:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if len(lines) > 1:
        raise ParseError("polynomial must be on a single line", lines[1][0])
    if not lines:
        return LinearizedPoly.zero(field)
    lineno, line = lines[0]
    coeffs = _ints(line, lineno)
    if any(not 0 <= c < field.order for c in coeffs):
        raise ParseError(f"coefficients must lie in [0, {field.order})", lineno)
    return LinearizedPoly(field, coeffs)


def format_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
