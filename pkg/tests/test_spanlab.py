import pytest

from homflygamma.braid import BraidWord, closure_info
from homflygamma.hecke import gamma
from homflygamma.poly import PolyMZ
from homflygamma.spanlab import (
    exact_rank,
    ladder_braids,
    predicted_dimension,
    rank_experiment,
    witness_braids,
    witness_expectations,
)


def test_predicted_dimension_examples():
    assert predicted_dimension(5, 3) == 2
    assert predicted_dimension(3, 4) == 2
    assert predicted_dimension(4, 6) == 2
    assert predicted_dimension(2, 0) == 1


def test_witnesses_small_k():
    assert witness_braids(1) == [BraidWord(2, (-1,))]
    assert witness_braids(2) == [BraidWord(3, (-1, -2)), BraidWord(3, (1, 2, 2, 2))]
    assert len(witness_braids(3)) == 2
    assert witness_expectations(3) == [3, 1]


@pytest.mark.parametrize("k", range(1, 8))
def test_witness_coefficients(k):
    words = witness_braids(k)
    assert len(words) == k // 2 + 1
    for w, a in zip(words, witness_expectations(k)):
        assert closure_info(w).is_knot
        p = gamma(w).value.coeff_in_z(k)
        assert p.terms in ({(a,): 1}, {(a,): -1})


def test_eq8_closed_form():
    base = PolyMZ({(0, 0): 1, (1, 1): -1})
    for k in range(1, 7):
        assert gamma(witness_braids(k)[0]).value == base**k


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    assert exact_rank([[2, 0, 0], [0, 3, 0], [0, 0, 10**40]]) == 3


def test_ladders_are_knots():
    for n in range(2, 6):
        for w in ladder_braids(n, 7):
            assert w.strands == n and closure_info(w).is_knot


@pytest.mark.parametrize("n,k,samples", [(2, 2, 50), (3, 2, 50), (3, 4, 100)])
def test_rank_experiment_examples(n, k, samples):
    rep = rank_experiment(n, k, samples, seed=0)
    assert rep.observed_rank == rep.predicted == predicted_dimension(n, k)


def test_parity_stratification():
    for n in range(2, 5):
        for k in range(6):
            rep = rank_experiment(n, k, 30, seed=k)
            assert rep.observed_rank <= predicted_dimension(n, k)
