import random

import pytest

from homflygamma.braid import BraidWord, labeled_markov_moves, random_knot_braid
from homflygamma.conway import BurauMatrix, alexander_polynomial, conway_polynomial, reduced_burau
from homflygamma.errors import NotAKnot
from homflygamma.hecke import gamma
from homflygamma.poly import LaurentT, PolyZ

t = LaurentT.var("t")


def test_burau_basics():
    assert reduced_burau(BraidWord(2, ())) == BurauMatrix.identity(2)
    assert reduced_burau(BraidWord(2, (1, -1))) == BurauMatrix.identity(2)
    assert reduced_burau(BraidWord(2, (1, 1, 1))).det() == -(t**3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_inverses(n):
    for i in range(1, n):
        assert reduced_burau(BraidWord(n, (i, -i))) == BurauMatrix.identity(n)
        assert reduced_burau(BraidWord(n, (-i, i))) == BurauMatrix.identity(n)


def test_burau_braid_relation():
    assert reduced_burau(BraidWord(4, (1, 2, 1))) == reduced_burau(BraidWord(4, (2, 1, 2)))
    assert reduced_burau(BraidWord(4, (1, 3))) == reduced_burau(BraidWord(4, (3, 1)))


def test_conway_examples():
    assert conway_polynomial(BraidWord(2, (1,))) == PolyZ.one()
    assert conway_polynomial(BraidWord(2, (1, 1, 1))) == PolyZ({(0,): 1, (2,): 1})
    assert conway_polynomial(BraidWord(3, (1, -2, 1, -2))) == PolyZ({(0,): 1, (2,): -1})
    assert alexander_polynomial(BraidWord(2, (1, 1, 1))) == t - 1 + t**-1


def test_not_a_knot():
    with pytest.raises(NotAKnot):
        conway_polynomial(BraidWord(2, (1, 1)))


def test_oracle_agreement_and_markov_invariance():
    rng = random.Random(21)
    for _ in range(60):
        w = random_knot_braid(rng.randint(2, 4), rng.randint(0, 10), rng)
        nabla = conway_polynomial(w)
        assert nabla.coeff((0,)) == 1
        assert all(e % 2 == 0 for (e,) in nabla.terms)
        assert nabla == gamma(w).value.at_mu_zero()
        for _, v in labeled_markov_moves(w):
            assert conway_polynomial(v) == nabla
