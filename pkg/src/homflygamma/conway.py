"""Alexander/Conway polynomial of a closed braid from the reduced Burau matrix.

This path shares nothing with the Hecke engine beyond the polynomial
arithmetic, so it serves as an independent check of Gamma at mu = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, closure_info
from .errors import NormalizationFailure, NotAKnot
from .poly import LaurentT, PolyZ

__all__ = ["BurauMatrix", "reduced_burau", "alexander_polynomial", "conway_polynomial"]

_T = LaurentT.var("t")
_TINV = _T ** -1
_ONE = LaurentT.one()
_ZERO = LaurentT.zero()


@dataclass(frozen=True)
class BurauMatrix:
    n: int
    entries: tuple[tuple[LaurentT, ...], ...]

    @property
    def size(self) -> int:
        return self.n - 1

    @classmethod
    def identity(cls, n: int) -> BurauMatrix:
        m = n - 1
        return cls(n, tuple(tuple(_ONE if i == j else _ZERO for j in range(m)) for i in range(m)))

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        m = self.size
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = _ZERO
                for k in range(m):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return BurauMatrix(self.n, tuple(rows))

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix(
            self.n,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def det(self) -> LaurentT:
        return _det([list(r) for r in self.entries])


def _det(rows: list[list[LaurentT]]) -> LaurentT:
    # cofactor expansion along the first row; matrices here are at most 4x4
    m = len(rows)
    if m == 0:
        return _ONE
    if m == 1:
        return rows[0][0]
    total = _ZERO
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _generator(n: int, letter: int) -> BurauMatrix:
    i = abs(letter)
    if letter > 0:
        block = ((_ONE, _T, _ZERO), (_ZERO, -_T, _ZERO), (_ZERO, _ONE, _ONE))
    else:
        block = ((_ONE, _ONE, _ZERO), (_ZERO, -_TINV, _ZERO), (_ZERO, _TINV, _ONE))
    m = n - 1
    rows = [[_ONE if r == c else _ZERO for c in range(m)] for r in range(m)]
    # block rows/cols sit at 0-based indices i-2, i-1, i; clip at the borders
    for br in range(3):
        for bc in range(3):
            r, c = i - 2 + br, i - 2 + bc
            if 0 <= r < m and 0 <= c < m:
                rows[r][c] = block[br][bc]
    return BurauMatrix(n, tuple(tuple(r) for r in rows))


def reduced_burau(w: BraidWord) -> BurauMatrix:
    if w.strands < 2:
        raise ValueError("the reduced Burau representation needs n >= 2")
    result = BurauMatrix.identity(w.strands)
    for x in w.letters:
        result = result @ _generator(w.strands, x)
    return result


def alexander_polynomial(w: BraidWord) -> LaurentT:
    """Symmetric Alexander polynomial of a knot closure, normalized to 1 at t = 1."""
    if not closure_info(w).is_knot:
        raise NotAKnot(f"closure of {w.strands}-braid '{w}' is not a knot")
    n = w.strands
    if n == 1:
        return _ONE
    d = (reduced_burau(w) - BurauMatrix.identity(n)).det()
    try:
        delta = (d * (_ONE - _T)).exact_div(_ONE - _T**n)
    except ArithmeticError as exc:
        raise NormalizationFailure(str(exc)) from exc
    if delta.is_zero():
        raise NormalizationFailure("vanishing Alexander polynomial for a knot")
    lo, hi = delta.min_degree(0), delta.degree(0)
    if (lo + hi) % 2:
        raise NormalizationFailure(f"{delta} cannot be centred by a unit t^k")
    delta = delta.shift((-(lo + hi) // 2,))
    at_one = delta.evaluate(1)
    if at_one not in (1, -1):
        raise NormalizationFailure(f"Delta(1) = {at_one}, expected +-1")
    delta = delta * at_one
    if delta != delta.substitute_inverse():
        raise NormalizationFailure(f"{delta} is not symmetric")
    return delta


def conway_polynomial(w: BraidWord) -> PolyZ:
    """Rewrite Delta(t) in the variable z with z^2 = t - 2 + t^-1."""
    delta = alexander_polynomial(w)
    z2 = _T - 2 + _TINV
    out: dict[int, int] = {}
    while not delta.is_zero():
        d = delta.degree(0)
        c = delta.coeff(d)
        out[2 * d] = c
        delta = delta - (z2**d) * c
    return PolyZ({(e,): c for e, c in out.items()})
