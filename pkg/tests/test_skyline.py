import json

import pytest

from kcrystals import golden
from kcrystals.crystal import atom_subset
from kcrystals.permutations import act, coset_reps
from kcrystals.polynomials import BetaPolynomial, lascoux_atom
from kcrystals.skyline import (
    SkylineTableau,
    enumerate_skyline,
    psi,
    psi_inverse,
    validate_skyline,
)
from kcrystals.tableaux import SetValuedTableau


def S(columns, shape):
    return SkylineTableau.build(shape, columns)


def test_validate_golden_examples():
    assert validate_skyline(S({1: [[1], [1]], 3: [[3], [3]]}, (2, 0, 2)), 3)
    assert validate_skyline(S({1: [[1], [1]], 3: [[2, 3], [2]]}, (2, 0, 2)), 3)
    # bottom anchor must equal the column index
    assert not validate_skyline(S({1: [[1], [1]], 3: [[2], [2]]}, (2, 0, 2)), 3)


def test_rows_cannot_repeat_entries():
    assert not validate_skyline(S({1: [[1], [1]], 3: [[1, 3], [1]]}, (2, 0, 2)), 3)


def test_enumerate_counts():
    assert len(enumerate_skyline((2, 0, 2), 3)) == 4
    # sorted shapes have the single constant filling
    only = enumerate_skyline((2, 2, 0), 3)
    assert len(only) == 1
    assert only[0].cell(1, 1) == (1,) and only[0].cell(2, 1) == (2,)
    two = enumerate_skyline((0, 1), 2)
    assert {json.dumps(s.to_json_dict(), sort_keys=True) for s in two} == {
        json.dumps(
            {"shape": [0, 1], "columns": {"2": [[2]]}}, sort_keys=True
        ),
        json.dumps(
            {"shape": [0, 1], "columns": {"2": [[1, 2]]}}, sort_keys=True
        ),
    }


def test_psi_golden_pairs():
    for pair in json.loads(golden.text("psi_pairs_s2.json")):
        skyline = SkylineTableau.from_json_dict(pair["skyline"])
        assert validate_skyline(skyline, 3)
        assert psi(skyline, 3).to_text() == pair["tableau"]


def test_psi_inverse_round_trip():
    w = (1, 3, 2)
    for skyline in enumerate_skyline((2, 0, 2), 3):
        assert psi_inverse(psi(skyline, 3), w) == skyline
    with pytest.raises(ValueError):
        psi_inverse(SetValuedTableau.from_text("1 1/2 2", 3), w)


def test_psi_lands_in_the_atom_with_matching_weights():
    for n, shape in ((3, (2, 2)), (4, (2, 2)), (3, (3, 3))):
        lam = shape + (0,) * (n - len(shape))
        for w in coset_reps(lam, n):
            a = act(w, lam)
            skylines = enumerate_skyline(a, n)
            images = {psi(s, n) for s in skylines}
            assert images == set(atom_subset(w, shape, n))
            total = BetaPolynomial.zero(n)
            for s in skylines:
                total += s.weight_monomial(n)
            assert total == lascoux_atom(a, n)


def test_json_round_trip():
    for skyline in enumerate_skyline((2, 0, 2), 3):
        data = json.loads(json.dumps(skyline.to_json_dict()))
        assert SkylineTableau.from_json_dict(data) == skyline
