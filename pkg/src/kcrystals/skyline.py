"""
Semistandard set-valued skyline tableaux and the bijection onto the
atom pieces of rectangular set-valued tableau families.

Columns are bottom-justified: column c of shape a holds cells at levels
1..a_c, level 1 at the bottom.  Within a cell the largest entry is its
anchor, the rest are free.  Going up a column, cells weakly decrease in
the set sense (min of the lower cell >= max of the cell above it).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .crystal import atom_subset
from .permutations import Perm, act
from .polynomials import BetaPolynomial
from .tableaux import SetValuedTableau

Cell = tuple[int, ...]


@dataclass(frozen=True)
class SkylineTableau:
    shape: tuple[int, ...]
    columns: tuple[tuple[int, tuple[Cell, ...]], ...]  # (column index, cells bottom-up)

    @classmethod
    def build(cls, shape, columns: dict[int, list]) -> "SkylineTableau":
        shape = tuple(shape)
        cols = []
        for c, height in enumerate(shape, start=1):
            if height == 0:
                continue
            cells = tuple(tuple(sorted(set(cell))) for cell in columns[c])
            if len(cells) != height or any(not cell for cell in cells):
                raise ValueError(f"column {c} must have {height} nonempty cells")
            cols.append((c, cells))
        return cls(shape, tuple(cols))

    def cell(self, c: int, level: int) -> Cell:
        """1-based column and level (level 1 = bottom)."""
        for col, cells in self.columns:
            if col == c:
                return cells[level - 1]
        raise KeyError(f"no column {c}")

    def cells_at_level(self, level: int) -> list[tuple[int, Cell]]:
        return [
            (c, cells[level - 1])
            for c, cells in self.columns
            if level <= len(cells)
        ]

    def weight(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for _, cells in self.columns:
            for cell in cells:
                for v in cell:
                    counts[v - 1] += 1
        return tuple(counts)

    def excess(self) -> int:
        return sum(len(cell) - 1 for _, cells in self.columns for cell in cells)

    def weight_monomial(self, n: int) -> BetaPolynomial:
        return BetaPolynomial.monomial(n, self.weight(n), beta=self.excess())

    def sort_key(self):
        return self.columns

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "columns": {
                str(c): [list(cell) for cell in cells] for c, cells in self.columns
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SkylineTableau":
        return cls.build(
            tuple(data["shape"]),
            {int(c): cells for c, cells in data["columns"].items()},
        )


def anchor(cell: Cell) -> int:
    return cell[-1]


def _free_fits(
    skyline: SkylineTableau, c: int, level: int, height: int, value: int
) -> bool:
    """Whether a free entry could legally live in cell (c, level): the
    column stays weakly decreasing upward and the entry stays free."""
    cell = skyline.cell(c, level)
    if value >= anchor(cell):
        return False
    if level > 1 and min(skyline.cell(c, level - 1)) < value:
        return False
    if level < height and max(skyline.cell(c, level + 1)) > value:
        return False
    return True


def validate_skyline(skyline: SkylineTableau, n: int | None = None) -> bool:
    heights = {c: len(cells) for c, cells in skyline.columns}

    for c, cells in skyline.columns:
        # bottom anchors name their column; columns weakly decrease upward
        if anchor(cells[0]) != c:
            return False
        for level in range(1, len(cells)):
            if min(cells[level - 1]) < max(cells[level]):
                return False
        if n is not None and any(v > n or v < 1 for cell in cells for v in cell):
            return False

    max_height = max(heights.values(), default=0)
    for level in range(1, max_height + 1):
        row = skyline.cells_at_level(level)
        seen: set[int] = set()
        for _, cell in row:
            for v in cell:
                if v in seen:
                    return False
                seen.add(v)

    # triple condition on anchors, for every pair of columns
    for (p, pcells), (q, qcells) in combinations(skyline.columns, 2):
        hp, hq = len(pcells), len(qcells)
        if hq >= hp:
            # A over B in the right column, C beside A in the left column
            for level in range(2, hq + 1):
                if level <= hp:
                    a = anchor(qcells[level - 1])
                    b = anchor(qcells[level - 2])
                    cc = anchor(pcells[level - 1])
                    if not (cc < a or b < cc):
                        return False
        else:
            # A over B in the left column, C beside A in the right column
            for level in range(2, hp + 1):
                if level <= hq:
                    a = anchor(pcells[level - 1])
                    b = anchor(pcells[level - 2])
                    cc = anchor(qcells[level - 1])
                    if not (cc < a or b < cc):
                        return False

    # free entries sit in the leftmost admissible cell of their row
    for c, cells in skyline.columns:
        for level in range(1, len(cells) + 1):
            cell = cells[level - 1]
            for v in cell[:-1]:
                for c2, _ in skyline.columns:
                    if c2 >= c:
                        break
                    if level <= heights[c2] and _free_fits(
                        skyline, c2, level, heights[c2], v
                    ):
                        return False
    return True


def _column_fillings(c: int, height: int, n: int):
    """All weakly-decreasing-upward column fillings with bottom anchor c."""
    if c > n:
        return
    bottoms = [
        tuple(sorted(sub + (c,)))
        for size in range(0, c)
        for sub in combinations(range(1, c), size)
    ]

    def extend(prefix: list[Cell]):
        if len(prefix) == height:
            yield tuple(prefix)
            return
        cap = min(prefix[-1])
        for size in range(1, cap + 1):
            for cell in combinations(range(1, cap + 1), size):
                yield from extend(prefix + [cell])

    for bottom in bottoms:
        yield from extend([bottom])


@lru_cache(maxsize=None)
def enumerate_skyline(a: tuple[int, ...], n: int) -> tuple[SkylineTableau, ...]:
    """All set-valued skyline tableaux of shape a with entries at most n."""
    a = tuple(a)
    nonzero = [(c, height) for c, height in enumerate(a, start=1) if height]
    per_column = []
    for c, height in nonzero:
        fillings = list(_column_fillings(c, height, n))
        if not fillings:
            return ()
        per_column.append(fillings)
    out = []
    for choice in product(*per_column):
        skyline = SkylineTableau(
            a, tuple((c, cells) for (c, _), cells in zip(nonzero, choice))
        )
        if validate_skyline(skyline, n):
            out.append(skyline)
    return tuple(sorted(out, key=SkylineTableau.sort_key))


def psi(skyline: SkylineTableau, n: int) -> SetValuedTableau:
    """Straighten each row (anchors sorted, free entries redistributed to
    the leftmost cell they fit under) and read row L, bottom-up, as
    tableau column s+1-L."""
    heights = [h for h in skyline.shape if h]
    widths = set(heights)
    if len(widths) != 1:
        raise ValueError("shape must be a rearranged rectangle")
    s = widths.pop()
    r = len(heights)

    straightened: list[list[list[int]]] = []
    for level in range(1, s + 1):
        row = skyline.cells_at_level(level)
        if len(row) != r:
            raise ValueError(f"level {level} has {len(row)} cells, expected {r}")
        anchors = sorted(anchor(cell) for _, cell in row)
        frees = sorted(v for _, cell in row for v in cell[:-1])
        cells: list[list[int]] = [[a] for a in anchors]
        for v in frees:
            for a, cell in zip(anchors, cells):
                if v < a:
                    cell.append(v)
                    break
            else:
                raise ValueError(f"free entry {v} fits under no anchor")
        straightened.append([sorted(cell) for cell in cells])

    rows = [
        [straightened[s - 1 - col][row_idx] for col in range(s)]
        for row_idx in range(r)
    ]
    tableau = SetValuedTableau(rows, n)
    if not tableau.is_semistandard():
        raise ValueError(f"image is not semistandard: {tableau!r}")
    return tableau


@lru_cache(maxsize=None)
def _psi_table(a: tuple[int, ...], n: int) -> dict[SetValuedTableau, SkylineTableau]:
    table = {}
    for skyline in enumerate_skyline(a, n):
        image = psi(skyline, n)
        if image in table:
            raise AssertionError(f"psi is not injective at {image!r}")
        table[image] = skyline
    return table


def psi_inverse(tableau: SetValuedTableau, w: Perm) -> SkylineTableau:
    """Inverse of psi on the atom of w; raises if the tableau is outside."""
    shape = tableau.shape
    n = tableau.n
    lam = shape + (0,) * (n - len(shape))
    a = act(w, lam)
    skyline = _psi_table(a, n).get(tableau)
    if skyline is None:
        if tableau not in set(atom_subset(w, shape, n)):
            raise ValueError(f"{tableau!r} is not in the atom of {w}")
        raise AssertionError(f"atom member missing from psi image: {tableau!r}")
    return skyline
