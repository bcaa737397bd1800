"""
Semistandard set-valued tableaux.

A tableau is a filling of a Young diagram by nonempty sets of integers in
[1, n] such that rows weakly increase (max of a box <= min of the box to
its right) and columns strictly increase (max of a box < min of the box
below).  Cells are stored as sorted tuples; tableaux are immutable and
hashable.

The text form joins rows top-to-bottom with "/", boxes with single
spaces, and in-box entries ascending with commas, e.g. "1 1,2/2,3 3".
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

Cell = tuple[int, ...]


class SetValuedTableau:
    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows, n: int):
        self.rows: tuple[tuple[Cell, ...], ...] = tuple(
            tuple(tuple(sorted(set(cell))) for cell in row) for row in rows
        )
        self.n = n
        self._hash = hash((self.rows, n))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetValuedTableau)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self) -> str:
        return f"SetValuedTableau({self.to_text()!r}, n={self.n})"

    # -- text grammar ---------------------------------------------------

    def to_text(self) -> str:
        return "/".join(
            " ".join(",".join(str(v) for v in cell) for cell in row)
            for row in self.rows
        )

    @classmethod
    def from_text(cls, text: str, n: int) -> "SetValuedTableau":
        rows = []
        for row_text in text.strip().split("/"):
            row = []
            for cell_text in row_text.split():
                row.append(tuple(int(v) for v in cell_text.split(",")))
            rows.append(row)
        return cls(rows, n)

    def sort_key(self) -> str:
        return self.to_text()

    # -- cell access ------------------------------------------------------

    def cell(self, r: int, c: int) -> Cell:
        """0-based access."""
        return self.rows[r][c]

    def with_cell(self, r: int, c: int, cell) -> "SetValuedTableau":
        rows = [list(row) for row in self.rows]
        rows[r][c] = tuple(sorted(set(cell)))
        return SetValuedTableau(rows, self.n)

    def cells(self):
        for r, row in enumerate(self.rows):
            for c, cell in enumerate(row):
                yield r, c, cell

    def contains(self, value: int) -> bool:
        return any(value in cell for _, _, cell in self.cells())

    def column(self, c: int) -> list[Cell]:
        return [row[c] for row in self.rows if c < len(row)]

    def column_entries(self, c: int) -> set[int]:
        out: set[int] = set()
        for row in self.rows:
            if c < len(row):
                out.update(row[c])
        return out

    # -- statistics -------------------------------------------------------

    def weight(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for _, _, cell in self.cells():
            for v in cell:
                counts[v - 1] += 1
        return tuple(counts)

    def excess(self) -> int:
        return sum(len(cell) - 1 for _, _, cell in self.cells())

    def box_count(self) -> int:
        return sum(self.shape)

    # -- validity -----------------------------------------------------------

    def is_semistandard(self) -> bool:
        shape = self.shape
        if list(shape) != sorted(shape, reverse=True):
            return False
        for r, c, cell in self.cells():
            if not cell or cell[0] < 1 or cell[-1] > self.n:
                return False
            if c + 1 < len(self.rows[r]) and cell[-1] > self.rows[r][c + 1][0]:
                return False
            if r + 1 < len(self.rows) and c < len(self.rows[r + 1]):
                if cell[-1] >= self.rows[r + 1][c][0]:
                    return False
        return True


def validate(tableau: SetValuedTableau) -> bool:
    return tableau.is_semistandard()


def superstandard(shape, n: int) -> SetValuedTableau:
    """The tableau with every box of row m equal to {m}; the minimal
    highest weight element of its shape."""
    rows = [[(m,)] * width for m, width in enumerate(shape, start=1) if width]
    return SetValuedTableau(rows, n)


def _nonempty_subsets(lo: int, hi: int):
    values = range(lo, hi + 1)
    for size in range(1, len(values) + 1):
        yield from combinations(values, size)


@lru_cache(maxsize=None)
def enumerate_svt(n: int, shape: tuple[int, ...]) -> tuple[SetValuedTableau, ...]:
    """All semistandard set-valued tableaux of the given shape with entries
    at most n, sorted by text form."""
    shape = tuple(s for s in shape if s)
    if list(shape) != sorted(shape, reverse=True):
        raise ValueError(f"shape must be a partition: {shape!r}")
    if not shape:
        return (SetValuedTableau((), n),)
    if len(shape) > n:
        return ()

    results: list[SetValuedTableau] = []
    rows: list[list[Cell]] = [[None] * width for width in shape]  # type: ignore

    coords = [(r, c) for r, width in enumerate(shape) for c in range(width)]

    def fill(idx: int) -> None:
        if idx == len(coords):
            results.append(SetValuedTableau(rows, n))
            return
        r, c = coords[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1][-1])
        if r > 0:
            lo = max(lo, rows[r - 1][c][-1] + 1)
        if lo > n:
            return
        for cell in _nonempty_subsets(lo, n):
            rows[r][c] = cell
            fill(idx + 1)
        rows[r][c] = None  # type: ignore

    fill(0)
    return tuple(sorted(results, key=SetValuedTableau.sort_key))
