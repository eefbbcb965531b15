"""Braid words, closures and Markov moves.

A letter ``l`` stands for sigma_|l| raised to sign(l); words are read left
to right. The empty word on ``n`` strands is the identity of B_n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import GeneratorOutOfRange, MalformedToken

__all__ = [
    "BraidWord",
    "ClosureInfo",
    "parse",
    "closure_info",
    "markov_moves",
    "labeled_markov_moves",
    "mirror",
    "canonical_cyclic_key",
    "random_braid",
    "random_knot_braid",
    "lcs_commutator",
    "enumerate_words",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise GeneratorOutOfRange(f"a braid needs at least one strand, got {self.strands}")
        for x in self.letters:
            if x == 0:
                raise MalformedToken("letter 0 does not name a generator")
            if abs(x) >= self.strands:
                raise GeneratorOutOfRange(
                    f"generator {x} needs at least {abs(x) + 1} strands, have {self.strands}"
                )

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def with_strands(self, n: int) -> BraidWord:
        return BraidWord(n, self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class ClosureInfo:
    components: int
    permutation: tuple[int, ...]

    @property
    def is_knot(self) -> bool:
        return self.components == 1


def parse(text: str, strands: int | None = None) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise MalformedToken(f"not an integer: {tok!r}") from None
        if x == 0:
            raise MalformedToken("letter 0 does not name a generator")
        letters.append(x)
    if strands is None:
        strands = 1 + max((abs(x) for x in letters), default=0)
    return BraidWord(strands, tuple(letters))


def _permutation(w: BraidWord) -> list[int]:
    perm = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def closure_info(w: BraidWord) -> ClosureInfo:
    perm = _permutation(w)
    seen = [False] * w.strands
    cycles = 0
    for start in range(w.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
    return ClosureInfo(cycles, tuple(perm))


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in w.letters))


def labeled_markov_moves(w: BraidWord) -> list[tuple[str, BraidWord]]:
    """Words with the same closure as ``w``, tagged with the move that made them.

    Tags: ``conjugate``, ``stabilize+``, ``stabilize-``, ``braid_relation``,
    ``commute``, ``insert``, ``cancel``. Only ``stabilize-`` changes Gamma
    (by the factor 1 - mu*z).
    """
    n, a = w.strands, w.letters
    out: list[tuple[str, BraidWord]] = []
    for r in range(len(a)):
        out.append(("conjugate", BraidWord(n, a[r:] + a[:r])))
    if not a:
        out.append(("conjugate", w))
    out.append(("stabilize+", BraidWord(n + 1, a + (n,))))
    out.append(("stabilize-", BraidWord(n + 1, a + (-n,))))
    for p in range(len(a) - 2):
        x, y, z = a[p : p + 3]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            out.append(("braid_relation", BraidWord(n, a[:p] + (y, x, y) + a[p + 3 :])))
    for p in range(len(a) - 1):
        x, y = a[p : p + 2]
        if abs(abs(x) - abs(y)) >= 2:
            out.append(("commute", BraidWord(n, a[:p] + (y, x) + a[p + 2 :])))
        if x == -y:
            out.append(("cancel", BraidWord(n, a[:p] + a[p + 2 :])))
    for i in range(1, n):
        out.append(("insert", BraidWord(n, (i, -i) + a)))
        out.append(("insert", BraidWord(n, (-i, i) + a)))
    return out


def markov_moves(w: BraidWord) -> set[BraidWord]:
    return {v for _, v in labeled_markov_moves(w)}


def _cyclic_free_reduce(letters: tuple[int, ...]) -> list[int]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo += 1
        hi -= 1
    return stack[lo:hi]


def canonical_cyclic_key(w: BraidWord) -> str:
    """Cache key constant on conjugation by letters and on free reduction.

    Sound (equal keys give equal Gamma) but not complete: words related by
    braid relations usually get different keys.
    """
    red = _cyclic_free_reduce(w.letters)
    best = min((tuple(red[r:] + red[:r]) for r in range(len(red))), default=())
    return f"{w.strands}:" + " ".join(map(str, best))


def random_braid(n: int, length: int, seed: int | random.Random) -> BraidWord:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    alphabet = [s * i for i in range(1, n) for s in (1, -1)]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def random_knot_braid(n: int, length: int, rng: random.Random, tries: int = 10_000) -> BraidWord:
    """Rejection-sample a word whose closure is a knot.

    Knot-closing words exist in B_n only at lengths >= n - 1 with matching
    permutation parity, so ``length`` is bumped by one if needed.
    """
    if n == 1:
        return BraidWord(1, ())
    if length < n - 1:
        length = n - 1
    if (length - (n - 1)) % 2:
        length += 1
    for _ in range(tries):
        w = random_braid(n, length, rng)
        if closure_info(w).is_knot:
            return w
    raise RuntimeError(f"no knot-closing word found in B_{n} at length {length}")


def lcs_commutator(depth: int) -> BraidWord:
    """Left-normed commutator in B_3 of a = sigma_1^2 and b = sigma_2^2.

    depth 2 gives [a, b] = a b a^-1 b^-1; each further level forms [g, a].
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    a = BraidWord(3, (1, 1))
    g = a * BraidWord(3, (2, 2)) * a.inverse() * BraidWord(3, (-2, -2))
    for _ in range(depth - 2):
        g = g * a * g.inverse() * a.inverse()
    return g


def enumerate_words(n: int, max_length: int):
    """All words in B_n of length <= max_length, shortest first."""
    alphabet = [s * i for i in range(1, n) for s in (1, -1)]
    for length in range(max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield BraidWord(n, letters)
