"""The .gyro interchange format.

ASCII with LF line endings.  Lines starting with '#' are comments; blank
lines are ignored.  The first significant line is exactly ``gyro 1``, the
second is the order n >= 1, followed by n rows of n space-separated
integers in 0..n-1; row a column b holds a (+) b.  Index 0 must be the left
identity, which is validated on load, never assumed.
"""

from __future__ import annotations

from pathlib import Path

from .core import GyroTable


class GyroParseError(ValueError):
    """The text is not a well-formed .gyro file."""


def parse_gyro(text: str) -> list[list[int]]:
    lines = [
        line.strip()
        for line in text.split("\n")
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GyroParseError("no significant lines")
    if lines[0] != "gyro 1":
        raise GyroParseError(f"bad header {lines[0]!r}, expected 'gyro 1'")
    if len(lines) < 2:
        raise GyroParseError("missing order line")
    try:
        n = int(lines[1])
    except ValueError:
        raise GyroParseError(f"bad order line {lines[1]!r}") from None
    if n < 1:
        raise GyroParseError(f"order must be >= 1, got {n}")
    body = lines[2:]
    if len(body) != n:
        raise GyroParseError(f"expected {n} rows, found {len(body)}")
    rows = []
    for i, line in enumerate(body):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise GyroParseError(f"row {i}: non-integer entry in {line!r}") from None
        if len(row) != n:
            raise GyroParseError(f"row {i}: expected {n} entries, found {len(row)}")
        for v in row:
            if not 0 <= v < n:
                raise GyroParseError(f"row {i}: entry {v} out of range 0..{n - 1}")
        rows.append(row)
    return rows


def format_gyro(table) -> str:
    rows = table.table if isinstance(table, GyroTable) else [tuple(r) for r in table]
    n = len(rows)
    lines = ["gyro 1", str(n)]
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def load_rows(path) -> list[list[int]]:
    return parse_gyro(Path(path).read_text(encoding="ascii"))


def load_table(path) -> GyroTable:
    """Parse and fully validate; raises AxiomError when the axioms fail."""
    return GyroTable(load_rows(path))


def save_table(path, table) -> None:
    Path(path).write_text(format_gyro(table), encoding="ascii", newline="\n")
