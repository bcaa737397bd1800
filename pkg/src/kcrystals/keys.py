"""
Key tableaux, right keys, the two entanglement-reversing involutions on
set-valued tableaux, and the derived key maps used to probe atom
decompositions.
"""

from __future__ import annotations

from functools import lru_cache

from .crystal import (
    beta_character,
    crystal_e,
    crystal_f,
    is_highest_weight,
)
from .permutations import Perm, act, bruhat_leq, coset_reps, length, reduced_word
from .polynomials import lascoux, lascoux_atom
from .tableaux import SetValuedTableau, enumerate_svt, superstandard


def is_key_tableau(tableau: SetValuedTableau) -> bool:
    """Singleton cells with nested column supports."""
    if tableau.excess() != 0:
        return False
    width = tableau.shape[0] if tableau.shape else 0
    for c in range(1, width):
        if not tableau.column_entries(c) <= tableau.column_entries(c - 1):
            return False
    return True


def key_of_composition(a) -> SetValuedTableau:
    """The unique key tableau of weight a: column j holds {i : a_i >= j}.

    >>> key_of_composition((0, 2, 2)).to_text()
    '2 2/3 3'
    """
    a = tuple(a)
    n = len(a)
    width = max(a, default=0)
    columns = [sorted(i + 1 for i, part in enumerate(a) if part >= j) for j in range(1, width + 1)]
    depth = len(columns[0]) if columns else 0
    rows = [
        [(col[r],) for col in columns if r < len(col)] for r in range(depth)
    ]
    return SetValuedTableau(rows, n)


def max_tableau(tableau: SetValuedTableau) -> SetValuedTableau:
    """Greatest entry in each box."""
    return SetValuedTableau(
        [[(cell[-1],) for cell in row] for row in tableau.rows], tableau.n
    )


def min_tableau(tableau: SetValuedTableau) -> SetValuedTableau:
    """Least entry in each box."""
    return SetValuedTableau(
        [[(cell[0],) for cell in row] for row in tableau.rows], tableau.n
    )


def _demazure_member(tableau: SetValuedTableau, v: Perm) -> bool:
    """Classical Demazure crystal membership by maximal raising."""
    u = superstandard(tableau.shape, tableau.n)
    current = tableau
    for i in reduced_word(v):
        while (up := crystal_e(current, i)) is not None:
            current = up
    return current == u


@lru_cache(maxsize=None)
def right_key(tableau: SetValuedTableau) -> SetValuedTableau:
    """Right key of a semistandard tableau: the key of v·λ for the
    Bruhat-least v whose classical Demazure crystal contains it."""
    if tableau.excess() != 0:
        raise ValueError("right keys are defined for single-valued tableaux")
    n = tableau.n
    shape = tableau.shape
    lam = shape + (0,) * (n - len(shape))
    members = [
        v for v in coset_reps(lam, n) if _demazure_member(tableau, v)
    ]
    least = min(members, key=lambda v: (length(v), v))
    assert all(bruhat_leq(least, v) for v in members)
    return key_of_composition(act(least, lam))


def max_right_key(tableau: SetValuedTableau) -> SetValuedTableau:
    """Right key of the greatest-entry tableau."""
    return right_key(max_tableau(tableau))


def _component(tableau: SetValuedTableau) -> set[SetValuedTableau]:
    component = {tableau}
    frontier = [tableau]
    while frontier:
        current = frontier.pop()
        for i in range(1, tableau.n):
            for image in (crystal_f(current, i), crystal_e(current, i)):
                if image is not None and image not in component:
                    component.add(image)
                    frontier.append(image)
    return component


@lru_cache(maxsize=None)
def lusztig_star(tableau: SetValuedTableau) -> SetValuedTableau:
    """Crystal anti-automorphism on each connected component: mirror the
    raising path of the tableau through the component's lowest element
    with complemented indices."""
    n = tableau.n
    path = []
    current = tableau
    while not is_highest_weight(current):
        for i in range(1, n):
            up = crystal_e(current, i)
            if up is not None:
                path.append(i)
                current = up
                break
    component = _component(current)
    lows = [
        t
        for t in component
        if all(crystal_f(t, i) is None for i in range(1, n))
    ]
    assert len(lows) == 1, "component must have a unique lowest weight element"
    result = lows[0]
    for i in reversed(path):
        result = crystal_e(result, n - i)
        assert result is not None
    return result


def k_lusztig_star(tableau: SetValuedTableau) -> SetValuedTableau:
    """Rotate the rectangle 180 degrees and complement every entry."""
    widths = {len(row) for row in tableau.rows}
    if len(widths) > 1:
        raise ValueError("the rotation involution needs a rectangular shape")
    n = tableau.n
    rows = [
        [tuple(sorted(n + 1 - v for v in cell)) for cell in reversed(row)]
        for row in reversed(tableau.rows)
    ]
    return SetValuedTableau(rows, n)


INVOLUTIONS = {
    "naive-star": lusztig_star,
    "rect-star": k_lusztig_star,
}


def k_right_key(tableau: SetValuedTableau, involution: str = "rect-star") -> SetValuedTableau:
    """Right key of min(T°)° for the chosen involution °; the outer star
    acts on a single-valued tableau, where both involutions agree with
    classical evacuation."""
    star = INVOLUTIONS[involution]
    return right_key(lusztig_star(min_tableau(star(tableau))))


def preceq(key1: SetValuedTableau, key2: SetValuedTableau) -> bool:
    """Entrywise comparison of two single-valued tableaux."""
    if key1.shape != key2.shape:
        raise ValueError("shape mismatch")
    return all(
        a[0] <= b[0]
        for row1, row2 in zip(key1.rows, key2.rows)
        for a, b in zip(row1, row2)
    )


KEY_MAPS = ("calK", "K-naive", "K-rect")


def _key_map(tableau: SetValuedTableau, key_map: str) -> SetValuedTableau:
    if key_map == "calK":
        return max_right_key(tableau)
    if key_map == "K-naive":
        return k_right_key(tableau, "naive-star")
    if key_map == "K-rect":
        return k_right_key(tableau, "rect-star")
    raise ValueError(f"unknown key map {key_map!r}")


def key_partition_report(shape, n: int, key_maps=KEY_MAPS) -> list[dict]:
    """For each coset representative w and each key map, compare the
    character of {T : key(T) <= K_{w lam}} with the Lascoux polynomial of
    w·lam, and of {T : key(T) = K_{w lam}} with the atom.  Failures are
    rows with match=False, never exceptions."""
    shape = tuple(shape)
    lam = shape + (0,) * (n - len(shape))
    is_rect = len({p for p in shape if p}) <= 1
    tableaux = enumerate_svt(n, shape)
    rows = []
    for key_map in key_maps:
        if key_map == "K-rect" and not is_rect:
            continue
        keys = {t: _key_map(t, key_map) for t in tableaux}
        for w in coset_reps(lam, n):
            a = act(w, lam)
            target = key_of_composition(a)
            ideal = [t for t in tableaux if preceq(keys[t], target)]
            atom = [t for t in tableaux if keys[t] == target]
            for mode, subset, expected in (
                ("ideal", ideal, lascoux(a, n)),
                ("atom", atom, lascoux_atom(a, n)),
            ):
                rows.append(
                    {
                        "shape": list(shape),
                        "w": list(w),
                        "involution": key_map,
                        "mode": mode,
                        "match": beta_character(subset, n) == expected,
                    }
                )
    return rows
