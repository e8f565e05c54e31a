"""Fragment tables and sliding grilles.

A table holds word fragments in groups of ``cols`` columns.  A grille is a
``rows`` by ``cols`` mask with exactly one hole per column; sliding it down a
group reveals one fragment per column at each stop, and the concatenation of
the revealed fragments is the generated word.

Row 0 is the top of both table and grille, indices grow downward.  A grille
whose topmost hole sits in row 0 is in canonical form; grilles that differ
only by a uniform vertical translation generate the same words from suitably
shifted tables, so only canonical grilles are enumerated.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import FormatError, OutOfBoundsError
from .wheels import EMPTY, Fragment


@dataclass(frozen=True)
class Grille:
    rows: int
    hole_row: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "hole_row", tuple(self.hole_row))
        if self.rows < 1:
            raise ValueError("grille needs at least one row")
        if not self.hole_row:
            raise ValueError("grille needs at least one column")
        for hole in self.hole_row:
            if not 0 <= hole < self.rows:
                raise ValueError(f"hole row {hole} outside 0..{self.rows - 1}")

    @property
    def cols(self) -> int:
        return len(self.hole_row)

    @property
    def is_canonical(self) -> bool:
        return min(self.hole_row) == 0

    def canonicalized(self) -> "Grille":
        """Translate the holes up so the topmost hole sits in row 0."""
        lift = min(self.hole_row)
        return Grille(self.rows, tuple(h - lift for h in self.hole_row))


def flat_grille(rows: int, cols: int) -> Grille:
    """All holes in the top row."""
    return Grille(rows, (0,) * cols)


@dataclass(frozen=True)
class FragmentTable:
    """groups[g][k] is column k of group g, one fragment per table row."""

    groups: tuple[tuple[tuple[Fragment, ...], ...], ...]

    def __post_init__(self):
        groups = tuple(tuple(tuple(col) for col in group) for group in self.groups)
        object.__setattr__(self, "groups", groups)
        if not groups:
            raise ValueError("table needs at least one group")
        cols = len(groups[0])
        if cols < 1:
            raise ValueError("table needs at least one column per group")
        rows = len(groups[0][0]) if groups[0] else 0
        for group in groups:
            if len(group) != cols:
                raise ValueError("all groups must have the same number of columns")
            for col in group:
                if len(col) != rows:
                    raise ValueError("all columns must have the same number of rows")

    @property
    def group_count(self) -> int:
        return len(self.groups)

    @property
    def cols(self) -> int:
        return len(self.groups[0])

    @property
    def rows(self) -> int:
        return len(self.groups[0][0])

    def cell(self, group: int, column: int, row: int) -> Fragment:
        return self.groups[group][column][row]

    @classmethod
    def from_rows(cls, row_groups: Iterable[Iterable[Sequence[Fragment]]]) -> "FragmentTable":
        """Build from row-major input: one sequence of rows per group."""
        groups = []
        for rows in row_groups:
            rows = [tuple(r) for r in rows]
            if not rows:
                raise ValueError("group must contain at least one row")
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise ValueError("ragged rows in group")
            groups.append(tuple(tuple(r[k] for r in rows) for k in range(width)))
        return cls(tuple(groups))


def grille_count(rows: int, cols: int = 3) -> int:
    """Number of canonical grilles: rows**cols - (rows-1)**cols."""
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    return rows**cols - (rows - 1) ** cols


def enumerate_grilles(rows: int, cols: int = 3) -> list[Grille]:
    """All canonical grilles in lexicographic hole order."""
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    return [
        Grille(rows, holes)
        for holes in itertools.product(range(rows), repeat=cols)
        if min(holes) == 0
    ]


def apply_grille(table: FragmentTable, grille: Grille, group: int, top_row: int) -> str:
    """Word revealed with the grille's top edge on ``top_row`` of ``group``."""
    if grille.cols != table.cols:
        raise ValueError(f"grille has {grille.cols} columns, table has {table.cols}")
    if not 0 <= group < table.group_count:
        raise IndexError(f"group {group} out of range 0..{table.group_count - 1}")
    if top_row < 0 or top_row + grille.rows > table.rows:
        raise OutOfBoundsError(
            f"grille rows {top_row}..{top_row + grille.rows - 1} outside table rows 0..{table.rows - 1}"
        )
    cols = table.groups[group]
    return "".join(cols[k][top_row + hole] for k, hole in enumerate(grille.hole_row))


def slide(table: FragmentTable, grille: Grille) -> list[str]:
    """Every word, group by group left to right, top_row ascending in each group."""
    stops = table.rows - grille.rows + 1
    return [
        apply_grille(table, grille, group, top)
        for group in range(table.group_count)
        for top in range(max(stops, 0))
    ]


def grille_to_shifts(grille: Grille) -> tuple[int, ...]:
    """Per-column downward table shifts equivalent to the grille's hole pattern.

    Sliding ``grille`` over shift_table(T, shifts) reveals exactly what the
    flat grille reveals over T at the same stops.
    """
    if not grille.is_canonical:
        raise ValueError("grille must be canonical (topmost hole in row 0)")
    return grille.hole_row


def shift_table(table: FragmentTable, shifts: Sequence[int]) -> FragmentTable:
    """Move column k of every group down by shifts[k].

    Vacated top cells become empty fragments and every column is padded at the
    bottom so the table stays rectangular; rows grow by max(shifts).
    """
    shifts = tuple(shifts)
    if len(shifts) != table.cols:
        raise ValueError(f"expected {table.cols} shifts, got {len(shifts)}")
    for s in shifts:
        if s < 0:
            raise ValueError("shifts must be non-negative")
    growth = max(shifts)
    new_groups = []
    for group in table.groups:
        new_cols = []
        for k, col in enumerate(group):
            pad_top = (EMPTY,) * shifts[k]
            pad_bottom = (EMPTY,) * (growth - shifts[k])
            new_cols.append(pad_top + col + pad_bottom)
        new_groups.append(tuple(new_cols))
    return FragmentTable(tuple(new_groups))


def table_entries_needed(word_types: int, grille_rows: int, cols: int = 3) -> int:
    """Table entries required to cover ``word_types`` words, one word per stop."""
    if word_types < 1:
        raise ValueError("word_types must be at least 1")
    if grille_rows < 2:
        raise ValueError("grille_rows must be at least 2")
    count = grille_count(grille_rows, cols)
    return -(-word_types // count)


# ---------------------------------------------------------------------------
# Table file format: tab-separated fragments, one table row per line, groups
# separated by a literal "|" column, "-" for the empty fragment, "#" comments.
# ---------------------------------------------------------------------------


def parse_table_text(text: str) -> FragmentTable:
    raw_rows: list[list[list[Fragment]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        cells = line.split("\t")
        row_groups: list[list[Fragment]] = [[]]
        for cell in cells:
            if cell == "|":
                row_groups.append([])
            else:
                row_groups[-1].append(EMPTY if cell == "-" else cell)
        for cells_in_group in row_groups:
            if not cells_in_group:
                raise FormatError(f"line {lineno}: empty group")
        if raw_rows and len(row_groups) != len(raw_rows[0]):
            raise FormatError(f"line {lineno}: inconsistent group count")
        if raw_rows:
            for g, cells_in_group in enumerate(row_groups):
                if len(cells_in_group) != len(raw_rows[0][g]):
                    raise FormatError(f"line {lineno}: inconsistent column count in group {g}")
        raw_rows.append(row_groups)
    if not raw_rows:
        raise FormatError("no table rows found")
    group_count = len(raw_rows[0])
    return FragmentTable.from_rows(
        [[row[g] for row in raw_rows] for g in range(group_count)]
    )


def format_table(table: FragmentTable) -> str:
    def cell(frag: Fragment) -> str:
        if frag == EMPTY:
            return "-"
        if frag in ("-", "|") or frag.startswith("#") or "\t" in frag or "\n" in frag or frag != frag.strip():
            raise FormatError(f"fragment {frag!r} is not representable in the table format")
        return frag

    lines = []
    for row in range(table.rows):
        parts: list[str] = []
        for g, group in enumerate(table.groups):
            if g:
                parts.append("|")
            parts.extend(cell(col[row]) for col in group)
        lines.append("\t".join(parts))
    return "\n".join(lines) + "\n"


def load_table_file(path) -> FragmentTable:
    with open(path, encoding="utf-8") as handle:
        return parse_table_text(handle.read())


def save_table_file(table: FragmentTable, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_table(table))
