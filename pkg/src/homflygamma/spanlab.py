"""Dimension of the span of the z^k coefficients of Gamma over closed n-braid knots."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, random_knot_braid
from .errors import DimensionDeficit, WitnessMismatch
from .hecke import gamma
from .poly import PolyMu

__all__ = [
    "DimensionReport",
    "predicted_dimension",
    "witness_braids",
    "witness_expectations",
    "exact_rank",
    "ladder_braids",
    "rank_experiment",
]


@dataclass(frozen=True)
class DimensionReport:
    n: int
    k: int
    predicted: int
    observed_rank: int
    witness_count: int
    sample_count: int
    ladder_count: int = 0

    @property
    def matches(self) -> bool:
        return self.observed_rank == self.predicted


def predicted_dimension(n: int, k: int) -> int:
    if k < n:
        return k // 2 + 1
    if n % 2 == 1 and k % 2 == 0:
        return n // 2 + 1
    return n // 2


def witness_braids(k: int) -> list[BraidWord]:
    """Knots in B_{k+1} whose z^k coefficients are +-mu^k, +-mu^(k-2), ...

    Starts from sigma_1^-1 ... sigma_k^-1 and swaps the pairs
    sigma_{j-1}^-1 sigma_j^-1 for sigma_{j-1} sigma_j^3, for j = k, k-2, ...
    down to 2, one more pair per word.
    """
    if k < 1:
        raise ValueError("witnesses need k >= 1")
    blocks: list[tuple[int, ...]] = [(-i,) for i in range(1, k + 1)]
    words = [BraidWord(k + 1, sum(blocks, ()))]
    for j in range(k, 1, -2):
        blocks[j - 2] = (j - 1,)
        blocks[j - 1] = (j, j, j)
        words.append(BraidWord(k + 1, sum(blocks, ())))
    return words


def witness_expectations(k: int) -> list[int]:
    """mu-exponent carried by the z^k coefficient of each witness, in order."""
    return [k] + [j - 2 for j in range(k, 1, -2)]


def _check_witnesses(k: int, words: list[BraidWord]) -> None:
    for w, a in zip(words, witness_expectations(k)):
        p = gamma(w).value.coeff_in_z(k)
        if len(p) != 1 or p.degree(0) != a or abs(p.coeff((a,))) != 1:
            raise WitnessMismatch(f"witness '{w}' has z^{k} coefficient {p}, expected +-mu^{a}")


def _stabilize_to(w: BraidWord, n: int) -> BraidWord:
    # positive stabilizations keep both Gamma and the knot type
    return BraidWord(n, w.letters + tuple(range(w.strands, n)))


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction Gaussian elimination."""
    mat = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not mat:
        return 0
    rank = 0
    ncols = len(mat[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / pv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def ladder_braids(n: int, k: int) -> list[BraidWord]:
    """Knots in B_n with z-degree reaching past k, for the k >= n branch.

    Each degree-(n-1) witness ends in a power of sigma_{n-1}; appending
    sigma_{n-1}^(+-2r) keeps the closure a knot and raises the z-degree.
    """
    if n < 2:
        return []
    bases = witness_braids(n - 1)
    out = []
    for w in bases:
        for r in range(1, k // 2 + 2):
            for sign in (1, -1):
                out.append(BraidWord(n, w.letters + (sign * (n - 1),) * (2 * r)))
    return out


def _vector(w: BraidWord, k: int, n: int) -> list[int]:
    p: PolyMu = gamma(w).value.coeff_in_z(k)
    return p.coefficient_vector(n)


def rank_experiment(n: int, k: int, extra_samples: int, seed: int = 0) -> DimensionReport:
    """Rank of the z^k coefficients over witness knots and random knots in B_n.

    Only knot closures are sampled: the bound being tested is a statement
    about knot invariants. For k < n the witnesses alone must reach the
    predicted rank; otherwise ladder braids are added and a short random
    sample is retried once at double size.
    """
    predicted = predicted_dimension(n, k)
    witnesses: list[BraidWord] = []
    if k == 0:
        witnesses = [BraidWord(1, ())]
    elif k < n:
        witnesses = witness_braids(k)
        _check_witnesses(k, witnesses)
    witnesses = [_stabilize_to(w, n) for w in witnesses]
    ladders = ladder_braids(n, k) if k >= n else []
    rows = [_vector(w, k, n) for w in witnesses]
    if witnesses and exact_rank(rows) < predicted:
        raise DimensionDeficit(
            f"witnesses reach rank {exact_rank(rows)} < {predicted} for n={n}, k={k}"
        )

    rows += [_vector(w, k, n) for w in ladders]
    rng = random.Random(seed)
    samples = extra_samples
    for attempt in range(2):
        sample_rows = []
        for _ in range(samples):
            w = random_knot_braid(n, rng.randint(0, k + 4), rng)
            sample_rows.append(_vector(w, k, n))
        observed = exact_rank(rows + sample_rows)
        if observed >= predicted or witnesses:
            break
        samples *= 2
    return DimensionReport(n, k, predicted, observed, len(witnesses), samples, len(ladders))
