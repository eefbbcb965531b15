import random

import pytest

from homflygamma.braid import BraidWord, lcs_commutator, mirror, random_knot_braid
from homflygamma.errors import NotAKnot
from homflygamma.hecke import gamma
from homflygamma.poly import PolyMu, PolyMZ, substitute_mu
from homflygamma.vassiliev import (
    allowed_exponents,
    bennequin,
    corrected_series,
    gamma_from_series,
    is_homfly_k_trivial,
    theorem1_check,
)

from conftest import mu_poly

TREFOIL = BraidWord(2, (1, 1, 1))
UNKNOT = BraidWord(2, (1,))


def test_corrected_series_examples():
    fs = corrected_series(gamma(TREFOIL), 3)
    assert fs.coefficients == (mu_poly(1), PolyMu.zero(), mu_poly(1, 0, -1), mu_poly(0, -1))
    assert corrected_series(gamma(UNKNOT), 5).coefficients == (PolyMu.one(),) + (PolyMu.zero(),) * 5
    assert corrected_series(gamma(BraidWord(1)), 2).coefficients == (PolyMu.one(), PolyMu.zero(), PolyMu.zero())


def test_corrected_series_rejects_links():
    with pytest.raises(NotAKnot):
        corrected_series(gamma(BraidWord(2, (1, 1))), 2)


def test_first_coefficient_vanishes_for_knots():
    rng = random.Random(31)
    for _ in range(100):
        w = random_knot_braid(rng.randint(2, 5), rng.randint(0, 12), rng)
        fs = corrected_series(gamma(w), 3)
        assert fs.coefficients[0] == PolyMu.one()
        assert fs.coefficients[1].is_zero()


def test_homfly_k_trivial_examples():
    assert is_homfly_k_trivial(TREFOIL, 1)
    assert not is_homfly_k_trivial(TREFOIL, 2)
    assert is_homfly_k_trivial(BraidWord(3, (1, 2)) * lcs_commutator(2), 1)


def test_theorem1_examples():
    rep = theorem1_check(UNKNOT)
    assert rep.hypothesis_holds and rep.constraint_satisfied
    assert rep.exponent_sum == 1 and rep.allowed_exponents == [1, -1] and rep.bennequin == -1

    rep = theorem1_check(TREFOIL)
    assert not rep.hypothesis_holds
    assert rep.first_nonvanishing == 2 and rep.bennequin == 1
    assert rep.theorem_consistent

    w = BraidWord(3, (1, 2)) * lcs_commutator(2)
    rep = theorem1_check(w)
    assert rep.exponent_sum == 2 and 2 in rep.allowed_exponents
    assert rep.theorem_consistent


def test_report_dict_is_json_ready():
    import json

    d = theorem1_check(TREFOIL, 4).to_dict()
    assert json.loads(json.dumps(d))["braid"] == {"strands": 2, "letters": [1, 1, 1]}


def test_bennequin_examples():
    assert bennequin(UNKNOT) == -1
    assert bennequin(TREFOIL) == 1
    assert bennequin(BraidWord(3)) == -3
    assert allowed_exponents(3) == [2, 0, -2]


def test_gamma_from_series_examples():
    for w, c in [(TREFOIL, 3), (UNKNOT, 1)]:
        g = gamma(w)
        assert gamma_from_series(corrected_series(g, c), c) == g.value
    with pytest.raises(ValueError):
        gamma_from_series(corrected_series(gamma(TREFOIL), 2), 3)


def test_gamma_from_series_round_trip():
    rng = random.Random(32)
    for _ in range(60):
        w = random_knot_braid(rng.randint(2, 5), rng.randint(0, 8), rng)
        g = gamma(w)
        assert gamma_from_series(corrected_series(g, w.length + 2), w.length) == g.value


def test_mirror_duality():
    rng = random.Random(33)
    for _ in range(60):
        w = random_knot_braid(rng.randint(2, 5), rng.randint(0, 10), rng)
        p = substitute_mu(gamma(w).value, w.exponent_sum, w.strands)
        m = mirror(w)
        q = substitute_mu(gamma(m).value, m.exponent_sum, m.strands)
        assert q == p.mirror()


def test_knot_homfly_shape():
    rng = random.Random(34)
    for _ in range(60):
        w = random_knot_braid(rng.randint(2, 5), rng.randint(0, 10), rng)
        p = substitute_mu(gamma(w).value, w.exponent_sum, w.strands)
        assert all(b >= 0 and a % 2 == 0 for a, b in p.terms)


def test_stanford_examples_are_nontrivial():
    for d in (2, 3):
        w = BraidWord(3, (1, 2)) * lcs_commutator(d)
        assert is_homfly_k_trivial(w, d - 1)
        assert substitute_mu(gamma(w).value, w.exponent_sum, 3) != 1


def test_triviality_criteria_agree_on_random_inputs():
    rng = random.Random(35)
    for _ in range(80):
        w = random_knot_braid(rng.randint(2, 4), rng.randint(0, 9), rng)
        for k in range(0, 5):
            is_homfly_k_trivial(w, k)  # raises if the two criteria disagree
