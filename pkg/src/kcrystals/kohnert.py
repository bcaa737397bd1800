"""
K-Kohnert diagrams and their moves, the closure of a skyline diagram,
and the weight-preserving correspondence with flagged set-valued
tableaux of rectangular shape.

A diagram is a finite set of boxes (x, y) in the positive quadrant
(x = column, y = row, Cartesian), with a marked subset.  A Kohnert move
drops the top unmarked box of a column into the rightmost open position
to its left in the same row, never passing over a marked box; the
K-variant leaves a marked copy at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polynomials import BetaPolynomial
from .tableaux import SetValuedTableau

Box = tuple[int, int]


@dataclass(frozen=True)
class KKohnertDiagram:
    boxes: frozenset[Box]
    marked: frozenset[Box]

    def __post_init__(self):
        if not self.marked <= self.boxes:
            raise ValueError("marked boxes must be a subset of the boxes")
        if any(x < 1 or y < 1 for x, y in self.boxes):
            raise ValueError("boxes must lie in the positive quadrant")

    def sort_key(self):
        return (tuple(sorted(self.boxes)), tuple(sorted(self.marked)))

    def column_heights(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for x, _ in self.boxes:
            if x > n:
                raise ValueError(f"box in column {x} exceeds n={n}")
            counts[x - 1] += 1
        return tuple(counts)

    def weight_monomial(self, n: int) -> BetaPolynomial:
        """b^(#marked) times x^(column box counts)."""
        return BetaPolynomial.monomial(
            n, self.column_heights(n), beta=len(self.marked)
        )

    def to_json_dict(self) -> dict:
        return {
            "boxes": [list(b) for b in sorted(self.boxes)],
            "marked": [list(b) for b in sorted(self.marked)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "KKohnertDiagram":
        return cls(
            frozenset(tuple(b) for b in data["boxes"]),
            frozenset(tuple(b) for b in data["marked"]),
        )


def initial_diagram(a) -> KKohnertDiagram:
    """Skyline of the weak composition a, nothing marked."""
    boxes = {
        (x, y)
        for x, height in enumerate(a, start=1)
        for y in range(1, height + 1)
    }
    return KKohnertDiagram(frozenset(boxes), frozenset())


def _move_targets(diagram: KKohnertDiagram):
    """Yield (origin, target) for every legal single move origin."""
    columns: dict[int, int] = {}
    for x, y in diagram.boxes:
        columns[x] = max(columns.get(x, 0), y)
    for x, y in sorted(columns.items()):
        if (x, y) in diagram.marked:
            continue
        target = None
        for x2 in range(x - 1, 0, -1):
            if (x2, y) not in diagram.boxes:
                target = (x2, y)
                break
            if (x2, y) in diagram.marked:
                break
        if target is not None:
            yield (x, y), target


def single_moves(
    diagram: KKohnertDiagram,
) -> list[tuple[int, bool, KKohnertDiagram]]:
    """All single-move results as (origin column, is_k_move, diagram)."""
    out = []
    for (x, y), target in _move_targets(diagram):
        moved = KKohnertDiagram(
            (diagram.boxes - {(x, y)}) | {target}, diagram.marked
        )
        out.append((x, False, moved))
        left_behind = KKohnertDiagram(
            diagram.boxes | {target}, diagram.marked | {(x, y)}
        )
        out.append((x, True, left_behind))
    return out


def kohnert_moves(diagram: KKohnertDiagram) -> set[KKohnertDiagram]:
    return {d for _, k, d in single_moves(diagram) if not k}


def k_kohnert_moves(diagram: KKohnertDiagram) -> set[KKohnertDiagram]:
    return {d for _, k, d in single_moves(diagram) if k}


@lru_cache(maxsize=None)
def closure(a: tuple[int, ...]) -> tuple[KKohnertDiagram, ...]:
    """All diagrams reachable from the skyline of a by (K-)Kohnert moves,
    sorted canonically."""
    start = initial_diagram(a)
    seen = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for _, _, image in single_moves(current):
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return tuple(sorted(seen, key=KKohnertDiagram.sort_key))


# -- correspondence with rectangular set-valued tableaux ---------------------


def phi(diagram: KKohnertDiagram, r: int, s: int, n: int) -> SetValuedTableau:
    """Read diagram row y (bottom = 1) as tableau column s+1-y: unmarked
    box columns become the cell entries top to bottom, and each marked box
    (x, y) joins the cell of the rightmost unmarked box to its left."""
    rows_of: dict[int, list[int]] = {}
    marked_of: dict[int, list[int]] = {}
    for x, y in diagram.boxes:
        if y > s:
            raise ValueError(f"box {(x, y)} above row {s}; not a rectangle image")
        bucket = marked_of if (x, y) in diagram.marked else rows_of
        bucket.setdefault(y, []).append(x)
    cells: list[list[set[int]]] = [[set() for _ in range(s)] for _ in range(r)]
    for y in range(1, s + 1):
        unmarked = sorted(rows_of.get(y, []))
        if len(unmarked) != r:
            raise ValueError(
                f"diagram row {y} has {len(unmarked)} unmarked boxes, expected {r}"
            )
        col = s - y
        for row_idx, x in enumerate(unmarked):
            cells[row_idx][col].add(x)
        for x in sorted(marked_of.get(y, [])):
            below = [u for u in unmarked if u < x]
            if not below:
                raise ValueError(f"marked box {(x, y)} has no unmarked box to its left")
            row_idx = unmarked.index(max(below))
            cells[row_idx][col].add(x)
    tableau = SetValuedTableau(cells, n)
    if not tableau.is_semistandard():
        raise ValueError(f"diagram does not map to a semistandard tableau: {tableau!r}")
    return tableau


def phi_inverse(tableau: SetValuedTableau) -> KKohnertDiagram:
    """Inverse reading: cell minima of tableau column c become unmarked
    boxes in diagram row s+1-c, the other entries marked boxes."""
    r, widths = len(tableau.rows), {len(row) for row in tableau.rows}
    if len(widths) > 1:
        raise ValueError("tableau shape must be a rectangle")
    s = widths.pop() if widths else 0
    boxes: set[Box] = set()
    marked: set[Box] = set()
    for rr, c, cell in tableau.cells():
        y = s - c
        boxes.add((cell[0], y))
        for v in cell[1:]:
            boxes.add((v, y))
            marked.add((v, y))
    return KKohnertDiagram(frozenset(boxes), frozenset(marked))


def svt_kohnert_move(
    tableau: SetValuedTableau, x: int, k_variant: bool = False
) -> SetValuedTableau | None:
    """The move on tableaux matching a diagram move in column x.

    In the leftmost column holding x, let x' be the largest value below x
    missing from the column: x is removed (kept, for the K-variant), the
    run of values x'+1..x-1 slides down one box, and x' lands in the box
    that held x'+1.  Returns None when x is not the minimum of its box,
    when x' would be 0, or when a value in the run shares its box."""
    if not tableau.contains(x):
        return None
    col = None
    for c in range(tableau.shape[0] if tableau.shape else 0):
        if x in tableau.column_entries(c):
            col = c
            break
    assert col is not None
    entries = tableau.column_entries(col)
    row_of = {v: _cell_row(tableau, col, v) for v in entries}
    if x != min(tableau.rows[row_of[x]][col]):
        return None
    x_prime = x - 1
    while x_prime >= 1 and x_prime in entries:
        x_prime -= 1
    if x_prime == 0:
        return None
    for v in range(x_prime + 1, x):
        if tableau.rows[row_of[v]][col] != (v,):
            return None
    out = tableau
    if not k_variant:
        out = out.with_cell(row_of[x], col, set(out.rows[row_of[x]][col]) - {x})
    for v in range(x - 1, x_prime, -1):
        below = row_of[v + 1]
        out = out.with_cell(below, col, set(out.rows[below][col]) | {v})
        out = out.with_cell(row_of[v], col, set(out.rows[row_of[v]][col]) - {v})
    target_row = row_of[x_prime + 1]
    out = out.with_cell(target_row, col, set(out.rows[target_row][col]) | {x_prime})
    return out


def _cell_row(tableau: SetValuedTableau, c: int, value: int) -> int:
    for r, row in enumerate(tableau.rows):
        if c < len(row) and value in row[c]:
            return r
    raise ValueError(f"column {c} has no entry {value}")
