"""Betti tables as elements of the additive group of integer tables with r+1 columns.

Entry ``(i, j)`` is ``dim Tor_i(M, k)_{i+j}``: column ``i`` is the homological
degree, row ``j`` the shifted internal degree. Rows are unbounded in both
directions so that intermediate sums and shifts never need clamping.
"""
from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Mapping

from .errors import ColumnMismatch

__all__ = [
    "BettiTable",
    "table_add",
    "table_shift",
    "table_scale",
    "render",
    "parse_json",
]


class BettiTable:
    """Immutable sparse table; zero entries are never stored."""

    __slots__ = ("_columns", "_entries", "_hash")

    def __init__(self, columns: int, entries: Mapping[tuple[int, int], int] | None = None):
        if columns < 1:
            raise ValueError(f"a Betti table needs at least one column, got {columns}")
        canon: dict[tuple[int, int], int] = {}
        for (i, j), v in (entries or {}).items():
            if not 0 <= i < columns:
                raise ColumnMismatch(f"column index {i} outside 0..{columns - 1}")
            v = int(v)
            if v:
                canon[(int(i), int(j))] = v
        self._columns = columns
        self._entries = canon
        self._hash = None

    @classmethod
    def zero(cls, columns: int) -> BettiTable:
        return cls(columns)

    @classmethod
    def from_rows(cls, columns: int, rows: Mapping[int, Iterable[int]]) -> BettiTable:
        """Build from ``{j: [beta_0j, beta_1j, ...]}``; short rows are zero-padded."""
        entries = {}
        for j, row in rows.items():
            row = list(row)
            if len(row) > columns:
                raise ColumnMismatch(f"row {j} has {len(row)} entries for {columns} columns")
            for i, v in enumerate(row):
                entries[(i, j)] = v
        return cls(columns, entries)

    @property
    def columns(self) -> int:
        return self._columns

    @property
    def r(self) -> int:
        return self._columns - 1

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def items(self):
        return sorted(self._entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def row_indices(self) -> list[int]:
        """Rows carrying a nonzero entry, ascending."""
        return sorted({j for (_, j) in self._entries})

    def row(self, j: int) -> list[int]:
        return [self._entries.get((i, j), 0) for i in range(self._columns)]

    def rows(self) -> dict[int, list[int]]:
        return {j: self.row(j) for j in self.row_indices()}

    def top_row(self) -> int | None:
        idx = self.row_indices()
        return idx[-1] if idx else None

    def bottom_row(self) -> int | None:
        idx = self.row_indices()
        return idx[0] if idx else None

    def is_zero(self) -> bool:
        return not self._entries

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._entries.values())

    def assert_nonnegative(self) -> BettiTable:
        bad = [(k, v) for k, v in self.items() if v < 0]
        if bad:
            raise ValueError(f"negative Betti numbers at {bad}")
        return self

    def padded(self, columns: int) -> BettiTable:
        """Embed into a table with more columns (new columns are zero)."""
        if columns < self._columns:
            raise ColumnMismatch(f"cannot pad {self._columns} columns down to {columns}")
        return BettiTable(columns, self._entries)

    # group structure

    def _check(self, other: BettiTable) -> None:
        if not isinstance(other, BettiTable):
            raise TypeError(f"expected BettiTable, got {type(other).__name__}")
        if other._columns != self._columns:
            raise ColumnMismatch(f"column counts differ: {self._columns} vs {other._columns}")

    def __add__(self, other: BettiTable) -> BettiTable:
        self._check(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return BettiTable(self._columns, out)

    def __neg__(self) -> BettiTable:
        return BettiTable(self._columns, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: BettiTable) -> BettiTable:
        return self + (-other)

    def __mul__(self, n: int) -> BettiTable:
        if not isinstance(n, int):
            return NotImplemented
        return BettiTable(self._columns, {k: n * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def shift(self, ell: int) -> BettiTable:
        """``T[ell]``: entry ``(i, j)`` of the result is entry ``(i, j - ell)`` of ``T``."""
        return BettiTable(self._columns, {(i, j + ell): v for (i, j), v in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._columns == other._columns and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._columns, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        rows = ", ".join(f"{j}: {self.row(j)}" for j in reversed(self.row_indices()))
        return f"BettiTable({self._columns}, {{{rows}}})"

    def __str__(self) -> str:
        return render(self, "ascii")

    # serialization

    def to_dict(self) -> dict:
        return {
            "columns": self._columns,
            "rows": [{"j": j, "entries": self.row(j)} for j in reversed(self.row_indices())],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> BettiTable:
        columns = int(data["columns"])
        rows = {}
        for rec in data["rows"]:
            j = int(rec["j"])
            if j in rows:
                raise ValueError(f"row {j} listed twice")
            entries = [int(v) for v in rec["entries"]]
            if len(entries) != columns:
                raise ColumnMismatch(f"row {j} has {len(entries)} entries, expected {columns}")
            rows[j] = entries
        return cls.from_rows(columns, rows)


def table_add(lhs: BettiTable, rhs: BettiTable) -> BettiTable:
    return lhs + rhs


def table_shift(t: BettiTable, ell: int) -> BettiTable:
    return t.shift(ell)


def table_scale(t: BettiTable, n: int) -> BettiTable:
    if n < 0:
        raise ValueError(f"scale factor must be >= 0, got {n}")
    return t * n


def _render_ascii(t: BettiTable) -> str:
    header = ["i"] + [str(i) for i in range(t.columns)]
    body = []
    top, bottom = t.top_row(), t.bottom_row()
    if top is not None:
        for j in range(top, bottom - 1, -1):
            body.append([f"β_{{i,{j}}}"] + [str(v) for v in t.row(j)])
    label_w = max(len(r[0]) for r in [header] + body)
    cell_w = max(len(c) for r in [header] + body for c in r[1:])
    lines = []
    for r in [header] + body:
        lines.append(r[0].ljust(label_w) + "".join(" " + c.rjust(cell_w) for c in r[1:]))
    return "\n".join(lines) + "\n"


def _render_csv(t: BettiTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j"] + [f"b{i}" for i in range(t.columns)])
    for j in reversed(t.row_indices()):
        w.writerow([j] + t.row(j))
    return buf.getvalue()


def render(t: BettiTable, format: str = "ascii") -> str:
    """Deterministic text rendering: ``ascii`` (rows descending), ``json`` or ``csv``."""
    if format == "ascii":
        return _render_ascii(t)
    if format == "json":
        return json.dumps(t.to_dict()) + "\n"
    if format == "csv":
        return _render_csv(t)
    raise ValueError(f"unknown format {format!r}")


def parse_json(text: str) -> BettiTable:
    """Inverse of ``render(t, "json")``; also accepts a fixture wrapping a ``table`` key."""
    data = json.loads(text)
    if "table" in data and "columns" not in data:
        data = data["table"]
    return BettiTable.from_dict(data)
