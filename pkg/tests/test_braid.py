import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homflygamma.braid import (
    BraidWord,
    canonical_cyclic_key,
    closure_info,
    enumerate_words,
    labeled_markov_moves,
    lcs_commutator,
    markov_moves,
    mirror,
    parse,
    random_braid,
    random_knot_braid,
)
from homflygamma.errors import GeneratorOutOfRange, MalformedToken


@st.composite
def braid_words(draw, max_n=5, max_len=10):
    n = draw(st.integers(2, max_n))
    letters = draw(
        st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)
    )
    return BraidWord(n, tuple(letters))


def test_parse():
    assert parse("1 1 1") == BraidWord(2, (1, 1, 1))
    assert parse("1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))
    assert parse("") == BraidWord(1, ())
    assert parse("  2 ", strands=5) == BraidWord(5, (2,))
    with pytest.raises(GeneratorOutOfRange):
        parse("3", strands=3)
    with pytest.raises(MalformedToken):
        parse("1 x")
    with pytest.raises(MalformedToken):
        parse("1 0 1")


def test_closure_info():
    assert closure_info(BraidWord(2, (1, 1, 1))).components == 1
    assert closure_info(BraidWord(2, (1, 1))).components == 2
    assert closure_info(BraidWord(3, ())).components == 3
    assert closure_info(BraidWord(3, (1, 2))).permutation == (2, 3, 1)


def test_markov_move_examples():
    moves = markov_moves(BraidWord(2, (1,)))
    assert BraidWord(3, (1, 2)) in moves
    assert BraidWord(3, (1, -2)) in moves
    assert BraidWord(3, (2, 1, 2)) in markov_moves(BraidWord(3, (1, 2, 1)))
    assert BraidWord(2, (1, 1, 1)) in markov_moves(BraidWord(2, (1, 1, 1)))


@given(braid_words())
def test_markov_moves_preserve_components_and_track_exponent_sum(w):
    c = closure_info(w).components
    for kind, v in labeled_markov_moves(w):
        assert closure_info(v).components == c
        shift = {"stabilize+": 1, "stabilize-": -1}.get(kind, 0)
        assert v.exponent_sum == w.exponent_sum + shift


def test_mirror():
    assert mirror(BraidWord(2, (1, 1, 1))) == BraidWord(2, (-1, -1, -1))
    assert mirror(BraidWord(3, (1, -2))) == BraidWord(3, (-1, 2))


@given(braid_words())
def test_mirror_involution(w):
    assert mirror(mirror(w)) == w
    assert mirror(w).exponent_sum == -w.exponent_sum


def test_canonical_key_examples():
    assert canonical_cyclic_key(BraidWord(2, (1, -1))) == canonical_cyclic_key(BraidWord(2, ()))
    assert canonical_cyclic_key(BraidWord(3, (2, 1))) == canonical_cyclic_key(BraidWord(3, (1, 2)))
    assert canonical_cyclic_key(BraidWord(3, (1, 2))) != canonical_cyclic_key(BraidWord(2, (1,)))


@given(braid_words(), st.integers(0, 20), st.integers(1, 4))
def test_canonical_key_constant_on_rotation_and_insertion(w, r, i):
    key = canonical_cyclic_key(w)
    a = w.letters
    if a:
        r %= len(a)
        assert canonical_cyclic_key(BraidWord(w.strands, a[r:] + a[:r])) == key
    i = min(i, w.strands - 1)
    pos = r % (len(a) + 1)
    inserted = a[:pos] + (i, -i) + a[pos:]
    assert canonical_cyclic_key(BraidWord(w.strands, inserted)) == key


def test_random_braid():
    assert random_braid(3, 0, 5) == BraidWord(3, ())
    assert random_braid(2, 5, 7) == random_braid(2, 5, 7)
    w = random_braid(4, 10, 1)
    assert w.length == 10 and all(1 <= abs(x) <= 3 for x in w.letters)


def test_random_knot_braid_is_knot():
    rng = random.Random(0)
    for n in range(1, 6):
        for L in range(6):
            assert closure_info(random_knot_braid(n, L, rng)).is_knot


def test_lcs_commutator():
    assert lcs_commutator(2) == BraidWord(3, (1, 1, 2, 2, -1, -1, -2, -2))
    assert lcs_commutator(3).length == 20
    for d in range(2, 6):
        g = lcs_commutator(d)
        assert g.exponent_sum == 0
        assert closure_info(g).permutation == (1, 2, 3)
    with pytest.raises(ValueError):
        lcs_commutator(1)


def test_enumerate_words_counts():
    assert sum(1 for _ in enumerate_words(2, 3)) == 1 + 2 + 4 + 8
    assert sum(1 for _ in enumerate_words(3, 2)) == 1 + 4 + 16
