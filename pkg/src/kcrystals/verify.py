"""
Named verification suites: each runs a family of exhaustive small-rank
checks and yields one result per case, with a serialized witness on
failure.  Suites are pure; cases can be fanned out to worker processes.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import golden
from .crystal import (
    atom_subset,
    beta_character,
    crystal_e,
    crystal_f,
    decompose,
    demazure_subset,
    flagged_set,
    ik_strings,
    is_k_highest_weight,
    kcrystal_e,
    kcrystal_f,
    superstandard,
)
from .keys import (
    k_lusztig_star,
    key_of_composition,
    key_partition_report,
    lusztig_star,
    max_right_key,
    preceq,
)
from .kohnert import (
    KKohnertDiagram,
    closure,
    phi,
    phi_inverse,
    single_moves,
    svt_kohnert_move,
)
from .permutations import (
    act,
    avoids_pattern,
    bruhat_ideal,
    bruhat_leq,
    coset_reps,
    evaluate_word,
    compose,
    inverse,
    lehmer_code,
    length,
    longest_element,
    reduced_words,
    stabilizer_min_rep,
)
from .polynomials import (
    BetaPolynomial,
    apply_word,
    grothendieck,
    lascoux,
    lascoux_atom,
    parse_polynomial,
)
from .skyline import enumerate_skyline, psi, psi_inverse
from .tableaux import SetValuedTableau, enumerate_svt

SUITE_NAMES = (
    "operator-algebra",
    "crystal-axioms",
    "k-crystal-axioms",
    "demazure-flag",
    "character",
    "kohnert-bijection",
    "skyline-bijection",
    "keys-rectangle",
    "grothendieck-vexillary",
    "conjecture-scan",
)


@dataclass(frozen=True)
class Bounds:
    max_n: int = 4
    max_side: int = 3
    max_cells: int = 6
    shape: tuple[int, ...] | None = None
    n: int | None = None


@dataclass
class SuiteResult:
    suite: str
    case: dict
    status: str  # "pass" | "fail"
    witness: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    def to_text(self, timings: bool = False) -> str:
        tag = self.status.upper()
        line = f"[{tag}] {self.suite} {json.dumps(self.case, sort_keys=True)}"
        if self.witness is not None:
            line += f" witness={self.witness}"
        if timings:
            line += f" elapsed={self.elapsed:.3f}s"
        return line

    def to_json(self, timings: bool = False) -> str:
        payload = {
            "suite": self.suite,
            "case": self.case,
            "status": self.status,
            "witness": self.witness,
        }
        if timings:
            payload["elapsed"] = round(self.elapsed, 3)
        return json.dumps(payload, sort_keys=True)


def _partitions(max_cells: int, max_len: int):
    """Nonempty partitions with at most max_cells boxes and max_len rows."""
    out = []

    def rec(prefix, remaining, cap):
        for part in range(min(cap, remaining), 0, -1):
            shape = prefix + (part,)
            if len(shape) <= max_len:
                out.append(shape)
                rec(shape, remaining - part, part)

    for total in range(1, max_cells + 1):
        rec((), total, total)
    return sorted(set(out))


def _rectangles(bounds: Bounds):
    for r in range(1, bounds.max_side + 1):
        for s in range(1, bounds.max_side + 1):
            yield (s,) * r


def _pad(shape, n):
    return tuple(shape) + (0,) * (n - len(shape))


def _rect_cases(bounds: Bounds, with_w: bool):
    for n in range(2, bounds.max_n + 1):
        for shape in _rectangles(bounds):
            if len(shape) > n:
                continue
            if not with_w:
                yield {"n": n, "shape": list(shape)}
                continue
            for w in coset_reps(_pad(shape, n), n):
                yield {"n": n, "shape": list(shape), "w": list(w)}


def iter_cases(suite: str, bounds: Bounds) -> list[dict]:
    cases: list[dict] = []
    if suite == "operator-algebra":
        for op in ("pi", "varpi", "isobaric"):
            for n in range(2, bounds.max_n + 1):
                cases.append({"check": "operator-relations", "op": op, "n": n})
        for n in range(2, bounds.max_n + 1):
            for shape in _partitions(bounds.max_cells, n):
                cases.append(
                    {"check": "bruhat-atom-sum", "n": n, "shape": list(shape)}
                )
    elif suite == "crystal-axioms":
        for n in range(2, bounds.max_n + 1):
            for shape in _partitions(bounds.max_cells, n):
                cases.append({"check": "inverse-ops", "n": n, "shape": list(shape)})
                cases.append({"check": "components", "n": n, "shape": list(shape)})
    elif suite == "k-crystal-axioms":
        for case in _rect_cases(bounds, with_w=False):
            cases.append({"check": "k-ops", **case})
            for i in range(1, case["n"]):
                cases.append({"check": "k-strings", "i": i, **case})
            cases.append({"check": "k-monotone", **case})
        for case in _rect_cases(bounds, with_w=True):
            cases.append({"check": "k-demazure", **case})
    elif suite == "demazure-flag":
        cases.append({"check": "flag-golden"})
        for case in _rect_cases(bounds, with_w=True):
            cases.append({"check": "flag", **case})
    elif suite == "character":
        cases.append({"check": "character-golden"})
        for n in range(2, bounds.max_n + 1):
            for shape in _partitions(bounds.max_cells, n):
                cases.append({"check": "full-character", "n": n, "shape": list(shape)})
    elif suite == "kohnert-bijection":
        cases.append({"check": "kohnert-golden"})
        for case in _rect_cases(bounds, with_w=True):
            cases.append({"check": "kohnert", **case})
            cases.append({"check": "kohnert-intertwine", **case})
    elif suite == "skyline-bijection":
        cases.append({"check": "skyline-golden"})
        for case in _rect_cases(bounds, with_w=True):
            cases.append({"check": "skyline", **case})
            cases.append({"check": "skyline-sum", **case})
    elif suite == "keys-rectangle":
        for case in _rect_cases(bounds, with_w=True):
            cases.append({"check": "key-ideal-atom", **case})
        for case in _rect_cases(bounds, with_w=False):
            cases.append({"check": "star-axioms", **case})
    elif suite == "grothendieck-vexillary":
        for name in sorted(GROTHENDIECK_GOLDENS):
            cases.append({"check": "groth-golden", "case": name})
    elif suite == "conjecture-scan":
        if bounds.shape is not None:
            shapes = [bounds.shape]
        else:
            shapes = [
                shape
                for shape in _partitions(min(bounds.max_cells, 4), bounds.max_n)
                if len(set(shape)) > 1
            ]
        for shape in shapes:
            ns = [bounds.n] if bounds.n else [max(len(shape) + 1, 3)]
            for n in ns:
                if len(shape) > n:
                    continue
                for w in coset_reps(_pad(shape, n), n):
                    cases.append(
                        {"check": "scan-kohnert", "n": n, "shape": list(shape), "w": list(w)}
                    )
                    cases.append(
                        {"check": "scan-skyline", "n": n, "shape": list(shape), "w": list(w)}
                    )
                cases.append({"check": "scan-keys", "n": n, "shape": list(shape)})
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return cases


# -- individual checks -------------------------------------------------------


def _fail(suite, case, witness):
    return SuiteResult(suite, case, "fail", witness)


def _ok(suite, case, witness=None):
    return SuiteResult(suite, case, "pass", witness)


def _monomials(n: int, max_degree: int):
    def rec(prefix, remaining):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + [e], remaining - e)

    yield from rec([], max_degree)


def _check_operator_relations(case):
    op, n = case["op"], case["n"]
    for exps in _monomials(n, 4):
        p = BetaPolynomial.monomial(n, exps)
        for i in range(1, n):
            once = apply_word(p, [i], op)
            twice = apply_word(once, [i], op)
            if op in ("pi", "varpi") and twice != once:
                return f"{op}_{i} not idempotent at x^{exps}"
        for i in range(1, n - 1):
            aba = apply_word(p, [i, i + 1, i], op)
            bab = apply_word(p, [i + 1, i, i + 1], op)
            if aba != bab:
                return f"{op} braid relation fails at x^{exps}, i={i}"
        for i, j in combinations(range(1, n), 2):
            if j - i > 1:
                ij = apply_word(p, [i, j], op)
                ji = apply_word(p, [j, i], op)
                if ij != ji:
                    return f"{op}_{i},{op}_{j} do not commute at x^{exps}"
    return None


def _check_bruhat_atom_sum(case):
    n, shape = case["n"], tuple(case["shape"])
    lam = _pad(shape, n)
    reps = set(coset_reps(lam, n))
    for w in reps:
        total = BetaPolynomial.zero(n)
        for v in bruhat_ideal(w):
            if v in reps:
                total += lascoux_atom(act(v, lam), n)
        if total != lascoux(act(w, lam), n):
            return f"atom sum mismatch at w={list(w)}"
    return None


def _check_inverse_ops(case):
    n, shape = case["n"], tuple(case["shape"])
    for t in enumerate_svt(n, shape):
        wt, ex = t.weight(), t.excess()
        for i in range(1, n):
            down = crystal_f(t, i)
            if down is not None:
                if crystal_e(down, i) != t:
                    return f"e_{i} f_{i} != id at {t.to_text()}"
                expected = list(wt)
                expected[i - 1] -= 1
                expected[i] += 1
                if down.weight() != tuple(expected) or down.excess() != ex:
                    return f"f_{i} weight law fails at {t.to_text()}"
                if not down.is_semistandard():
                    return f"f_{i} broke semistandardness at {t.to_text()}"
            up = crystal_e(t, i)
            if up is not None and crystal_f(up, i) != t:
                return f"f_{i} e_{i} != id at {t.to_text()}"
    return None


def _check_components(case):
    n, shape = case["n"], tuple(case["shape"])
    comps = decompose(n, shape)  # raises if a component lacks a unique highest
    total = sum(len(comp) for _, comp in comps)
    tableaux = enumerate_svt(n, shape)
    if total != len(tableaux):
        return f"components cover {total} of {len(tableaux)} tableaux"
    u = superstandard(shape, n)
    for high, comp in comps:
        if high == u:
            singletons = {t for t in tableaux if t.excess() == 0}
            if set(comp) != singletons:
                return "component of the minimal highest weight element is not the single-valued one"
    return None


def _check_k_ops(case):
    n, shape = case["n"], tuple(case["shape"])
    tableaux = enumerate_svt(n, shape)
    by_f: dict[tuple, SetValuedTableau] = {}
    for t in tableaux:
        for i in range(1, n):
            down = kcrystal_f(t, i)
            if down is not None:
                if not down.is_semistandard():
                    return f"f^K_{i} broke semistandardness at {t.to_text()}"
                if kcrystal_f(down, i) is not None:
                    return f"f^K_{i} f^K_{i} != 0 at {t.to_text()}"
                wt, expected = t.weight(), list(t.weight())
                expected[i] += 1
                if down.weight() != tuple(expected) or down.excess() != t.excess() + 1:
                    return f"f^K_{i} weight law fails at {t.to_text()}"
                by_f[(t, i)] = down
    for t in tableaux:
        for i in range(1, n):
            up = kcrystal_e(t, i)
            if up is not None and by_f.get((up, i)) != t:
                return f"e^K_{i} is not inverse to f^K_{i} at {t.to_text()}"
    for (t, i), down in by_f.items():
        if kcrystal_e(down, i) != t:
            return f"f^K_{i} is not inverse to e^K_{i} at {t.to_text()}"
    return None


def _check_k_strings(case):
    n, shape, i = case["n"], tuple(case["shape"]), case["i"]
    try:
        strings = ik_strings(n, shape, i)
    except AssertionError as exc:
        return str(exc)
    lam = _pad(shape, n)
    subsets = {
        w: set(demazure_subset(w, shape, n)) for w in coset_reps(lam, n)
    }
    for string in strings:
        if string.bottom and len(string.bottom) != len(string.top) - 1:
            return f"string at {string.top[0].to_text()} has uneven rows"
        elements = set(string.elements())
        top = string.top[0]
        for w, subset in subsets.items():
            meet = subset & elements
            if meet not in (set(), elements, {top}):
                return (
                    f"string at {top.to_text()} meets the subset of w={list(w)} "
                    f"in {sorted(t.to_text() for t in meet)}"
                )
    return None


def _check_k_monotone(case):
    n, shape = case["n"], tuple(case["shape"])
    lam = _pad(shape, n)
    reps = coset_reps(lam, n)
    for v in reps:
        sv = set(demazure_subset(v, shape, n))
        for w in reps:
            if bruhat_leq(v, w) and not sv <= set(demazure_subset(w, shape, n)):
                return f"monotonicity fails for v={list(v)} <= w={list(w)}"
    return None


def _check_k_demazure(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    u = superstandard(shape, n)
    tableaux = enumerate_svt(n, shape)
    doubly_highest = [t for t in tableaux if is_k_highest_weight(t)]
    if doubly_highest != [u]:
        return f"minimal highest weight element is not unique: {[t.to_text() for t in doubly_highest]}"
    words = sorted(reduced_words(stabilizer_min_rep(w, lam)))
    baseline = demazure_subset(w, shape, n, words[0])
    for word in words[1:]:
        if demazure_subset(w, shape, n, word) != baseline:
            return f"subset depends on the reduced word {word}"
    if u not in baseline:
        return "minimal highest weight element missing from the subset"
    character = beta_character(baseline, n)
    if character != lascoux(act(w, lam), n):
        return f"character mismatch: {character.to_text()}"
    if tuple(w) == stabilizer_min_rep(longest_element(n), lam) and set(baseline) != set(tableaux):
        return "top subset is not everything"
    return None


def _check_flag(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    left = set(demazure_subset(w, shape, n))
    right = set(flagged_set(w, shape, n))
    if left != right:
        diff = left.symmetric_difference(right)
        return f"flag mismatch: {sorted(t.to_text() for t in diff)}"
    return None


def _check_flag_golden(case):
    five = flagged_set((1, 3, 2), (2, 2), 3)
    if len(five) != 5:
        return f"expected 5 flagged tableaux, got {len(five)}"
    all13 = enumerate_svt(3, (2, 2))
    if len(all13) != 13:
        return f"expected 13 tableaux, got {len(all13)}"
    if set(demazure_subset((1, 3, 2), (2, 2), 3)) != set(five):
        return "flagged and K-Demazure sets disagree on the golden case"
    return None


def _check_full_character(case):
    n, shape = case["n"], tuple(case["shape"])
    lam = _pad(shape, n)
    top = tuple(reversed(lam))
    total = beta_character(enumerate_svt(n, shape), n)
    if total != lascoux(top, n):
        return "character of all tableaux differs from the top polynomial"
    if not total.is_symmetric():
        return "full character is not symmetric"
    return None


def _check_character_golden(case):
    expected = parse_polynomial(golden.text("lascoux_022.txt"), 3)
    actual = lascoux((0, 2, 2), 3)
    if actual != expected:
        return f"lascoux((0,2,2),3) = {actual.to_text()}"
    if beta_character(enumerate_svt(3, (2, 2)), 3) != expected:
        return "tableau character disagrees with the golden polynomial"
    diagrams = closure((0, 2, 2))
    total = BetaPolynomial.zero(3)
    for d in diagrams:
        total += d.weight_monomial(3)
    if total != expected:
        return "diagram weights disagree with the golden polynomial"
    return None


def _check_kohnert(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    r, s = len(shape), shape[0]
    a = act(w, lam)
    diagrams = closure(a)
    flagged = set(flagged_set(w, shape, n))
    images = {}
    for d in diagrams:
        t = phi(d, r, s, n)
        if t in images:
            return f"phi collision at {t.to_text()}"
        if d.weight_monomial(n) != BetaPolynomial.monomial(n, t.weight(), beta=t.excess()):
            return f"phi does not preserve the weight of {t.to_text()}"
        if phi_inverse(t) != d:
            return f"phi_inverse(phi(D)) != D at {t.to_text()}"
        images[t] = d
    if set(images) != flagged:
        diff = set(images).symmetric_difference(flagged)
        return f"phi image mismatch: {sorted(t.to_text() for t in diff)}"
    return None


def _check_kohnert_intertwine(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    r, s = len(shape), shape[0]
    for d in closure(act(w, lam)):
        t = phi(d, r, s, n)
        diagram_moves = {
            (x, k): image for x, k, image in single_moves(d)
        }
        for x in sorted({x for x, _ in d.boxes}):
            for k in (False, True):
                moved = svt_kohnert_move(t, x, k)
                key = (x, k)
                if (key in diagram_moves) != (moved is not None):
                    return f"move availability differs at {t.to_text()}, x={x}, k={k}"
                if moved is not None and phi(diagram_moves[key], r, s, n) != moved:
                    return f"moves do not intertwine at {t.to_text()}, x={x}, k={k}"
    return None


def _check_kohnert_golden(case):
    diagrams = closure((0, 2, 2))
    expected = {
        KKohnertDiagram.from_json_dict(d).sort_key()
        for d in json.loads(golden.text("grid_022_diagrams.json"))
    }
    if {d.sort_key() for d in diagrams} != expected:
        return "closure of (0,2,2) differs from the golden 13 diagrams"
    pairs = json.loads(golden.text("phi_pairs_s2.json"))
    for pair in pairs:
        d = KKohnertDiagram.from_json_dict(pair["diagram"])
        if phi(d, 2, 2, 3).to_text() != pair["tableau"]:
            return f"phi golden pair mismatch at {pair['tableau']}"
        if phi_inverse(SetValuedTableau.from_text(pair["tableau"], 3)) != d:
            return f"phi_inverse golden pair mismatch at {pair['tableau']}"
    return None


def _check_skyline(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    a = act(w, lam)
    skylines = enumerate_skyline(a, n)
    atom = set(atom_subset(w, shape, n))
    images = {}
    total = BetaPolynomial.zero(n)
    for skyline in skylines:
        t = psi(skyline, n)
        if t in images:
            return f"psi collision at {t.to_text()}"
        if skyline.weight_monomial(n) != BetaPolynomial.monomial(n, t.weight(), beta=t.excess()):
            return f"psi does not preserve the weight of {t.to_text()}"
        if psi_inverse(t, w) != skyline:
            return f"psi_inverse(psi(S)) != S at {t.to_text()}"
        images[t] = skyline
        total += skyline.weight_monomial(n)
    if set(images) != atom:
        diff = set(images).symmetric_difference(atom)
        return f"psi image mismatch: {sorted(t.to_text() for t in diff)}"
    if total != lascoux_atom(a, n):
        return "skyline character differs from the atom polynomial"
    return None


def _check_skyline_sum(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    reps = set(coset_reps(lam, n))
    total = BetaPolynomial.zero(n)
    for v in bruhat_ideal(tuple(w)):
        if v in reps:
            for skyline in enumerate_skyline(act(v, lam), n):
                total += skyline.weight_monomial(n)
    if total != lascoux(act(w, lam), n):
        return "skyline sum over the Bruhat ideal differs from the polynomial"
    return None


def _check_skyline_golden(case):
    skylines = enumerate_skyline((2, 0, 2), 3)
    if len(skylines) != 4:
        return f"expected 4 skylines for (2,0,2), got {len(skylines)}"
    pairs = json.loads(golden.text("psi_pairs_s2.json"))
    table = {
        json.dumps(s.to_json_dict(), sort_keys=True): psi(s, 3).to_text()
        for s in skylines
    }
    expected = {
        json.dumps(pair["skyline"], sort_keys=True): pair["tableau"]
        for pair in pairs
    }
    if table != expected:
        return f"psi golden pairs mismatch: {table}"
    return None


def _check_key_ideal_atom(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    a = act(tuple(w), lam)
    target = key_of_composition(a)
    tableaux = enumerate_svt(n, shape)
    ideal = {t for t in tableaux if preceq(max_right_key(t), target)}
    atom = {t for t in tableaux if max_right_key(t) == target}
    if ideal != set(demazure_subset(tuple(w), shape, n)):
        return "key ideal differs from the K-Demazure subset"
    if atom != set(atom_subset(tuple(w), shape, n)):
        return "key fiber differs from the atom subset"
    return None


def _check_star_axioms(case):
    n, shape = case["n"], tuple(case["shape"])
    tableaux = enumerate_svt(n, shape)
    for t in tableaux:
        star = k_lusztig_star(t)
        if k_lusztig_star(star) != t:
            return f"rotation involution does not square to id at {t.to_text()}"
        if star.weight() != tuple(reversed(t.weight())):
            return f"rotation involution weight law fails at {t.to_text()}"
        naive = lusztig_star(t)
        if lusztig_star(naive) != t:
            return f"path-mirror involution does not square to id at {t.to_text()}"
        if naive.weight() != tuple(reversed(t.weight())):
            return f"path-mirror weight law fails at {t.to_text()}"
        if len(shape) == 1 and naive != star:
            return f"single-row involutions disagree at {t.to_text()}"
        for i in range(1, n):
            left = crystal_e(star, i)
            down = crystal_f(t, n - i)
            right = None if down is None else k_lusztig_star(down)
            if left != right:
                return f"e_{i}(T°) != (f_{n-i}T)° at {t.to_text()}"
            left = crystal_f(star, i)
            up = crystal_e(t, n - i)
            right = None if up is None else k_lusztig_star(up)
            if left != right:
                return f"f_{i}(T°) != (e_{n-i}T)° at {t.to_text()}"
    return None


GROTHENDIECK_GOLDENS = {
    "square22-short": {
        "weight": (0, 2, 2),
        "weight_n": 3,
        "word": (2, 1, 2, 4, 3, 4),
        "m": 5,
    },
    "square22-long": {
        "weight": (0, 0, 2, 2),
        "weight_n": 4,
        "word": (3, 2, 1, 3, 2, 5, 4, 3, 5, 4, 5),
        "m": 6,
    },
    "shape42": {
        "weight": (4, 0, 2),
        "weight_n": 5,
        "word": (2, 4, 3, 4),
        "m": 5,
    },
}


def _check_groth_golden(case):
    data = GROTHENDIECK_GOLDENS[case["case"]]
    m = data["m"]
    chain = evaluate_word(data["word"], m)
    perm = compose(longest_element(m), inverse(chain))
    if length(chain) != len(data["word"]):
        return "golden word is not reduced"
    if not avoids_pattern(perm, (2, 1, 4, 3)):
        return f"indexing permutation {list(perm)} is not vexillary"
    left = lascoux(data["weight"], data["weight_n"]).extend(m)
    right = grothendieck(perm, m)
    if left != right:
        return f"polynomials differ: {left.to_text()} vs {right.to_text()}"
    code = lehmer_code(perm)
    if code != _pad(data["weight"], m):
        return f"Lehmer code {code} differs from the weight"
    return None


def _check_scan_kohnert(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    a = act(tuple(w), lam)
    total = BetaPolynomial.zero(n)
    for d in closure(a):
        total += d.weight_monomial(n)
    match = total == lascoux(a, n)
    return json.dumps(
        {"conjecture": "kohnert-closure", "match": match, "w312": avoids_pattern(tuple(w), (3, 1, 2))},
        sort_keys=True,
    )


def _check_scan_skyline(case):
    n, shape, w = case["n"], tuple(case["shape"]), tuple(case["w"])
    lam = _pad(shape, n)
    a = act(tuple(w), lam)
    total = BetaPolynomial.zero(n)
    for skyline in enumerate_skyline(a, n):
        total += skyline.weight_monomial(n)
    match = total == lascoux_atom(a, n)
    return json.dumps(
        {"conjecture": "skyline-atom", "match": match, "w312": avoids_pattern(tuple(w), (3, 1, 2))},
        sort_keys=True,
    )


def _check_scan_keys(case):
    n, shape = case["n"], tuple(case["shape"])
    rows = key_partition_report(shape, n)
    return json.dumps(rows, sort_keys=True)


_CHECKS = {
    "operator-relations": _check_operator_relations,
    "bruhat-atom-sum": _check_bruhat_atom_sum,
    "inverse-ops": _check_inverse_ops,
    "components": _check_components,
    "k-ops": _check_k_ops,
    "k-strings": _check_k_strings,
    "k-monotone": _check_k_monotone,
    "k-demazure": _check_k_demazure,
    "flag": _check_flag,
    "flag-golden": _check_flag_golden,
    "full-character": _check_full_character,
    "character-golden": _check_character_golden,
    "kohnert": _check_kohnert,
    "kohnert-intertwine": _check_kohnert_intertwine,
    "kohnert-golden": _check_kohnert_golden,
    "skyline": _check_skyline,
    "skyline-sum": _check_skyline_sum,
    "skyline-golden": _check_skyline_golden,
    "key-ideal-atom": _check_key_ideal_atom,
    "star-axioms": _check_star_axioms,
    "groth-golden": _check_groth_golden,
    "scan-kohnert": _check_scan_kohnert,
    "scan-skyline": _check_scan_skyline,
    "scan-keys": _check_scan_keys,
}

_REPORT_CHECKS = {"scan-kohnert", "scan-skyline", "scan-keys"}


def run_case(suite: str, case: dict) -> SuiteResult:
    started = time.monotonic()
    check = case["check"]
    try:
        witness = _CHECKS[check](case)
    except Exception as exc:  # a crash is a failing case, not a crash of the run
        result = _fail(suite, case, f"exception: {exc!r}")
        result.elapsed = time.monotonic() - started
        return result
    if check in _REPORT_CHECKS:
        result = _ok(suite, case, witness)
    elif witness is None:
        result = _ok(suite, case)
    else:
        result = _fail(suite, case, witness)
    result.elapsed = time.monotonic() - started
    return result


def _case_key(result: SuiteResult):
    return (result.suite, json.dumps(result.case, sort_keys=True))


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get("KCRYSTALS_JOBS")
    return max(1, int(env)) if env else 1


def _run_packed(packed):
    return run_case(*packed)


def run_suite(suite: str, bounds: Bounds, jobs: int | None = None) -> list[SuiteResult]:
    cases = iter_cases(suite, bounds)
    packed = [(suite, case) for case in cases]
    count = worker_count(jobs)
    if count > 1 and len(packed) > 1:
        import multiprocessing

        with multiprocessing.Pool(count) as pool:
            results = pool.map(_run_packed, packed)
    else:
        results = [run_case(*item) for item in packed]
    return sorted(results, key=_case_key)
