"""Gamma(mu, z) through the Hecke algebra and a recursive Markov trace.

Elements of the Hecke algebra H_n are linear combinations of positive
permutation braids T_w (w a permutation in one-line notation) with
coefficients in Z[z], subject to T_i^2 = z T_i + 1, which is the skein
relation Gamma(b s_i) - Gamma(b s_i^-1) = z Gamma(b) in algebra form.
Inverses follow as T_i^-1 = T_i - z.

The trace is the linear functional fixed by

    tr(x) = mu * tr_{n-1}(x)        for x in H_{n-1}
    tr(x T_{n-1}) = tr_{n-1}(x)     for x in H_{n-1}
    tr(1 in H_1) = 1

together with tr(xy) = tr(yx). The variable mu only appears in the trace,
so the algebra part of the computation stays in Z[z].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, canonical_cyclic_key, closure_info
from .errors import GeneratorOutOfRange
from .poly import PolyMZ, PolyZ

__all__ = [
    "HeckeElement",
    "GammaResult",
    "right_multiply",
    "left_multiply",
    "markov_trace",
    "normal_factor",
    "gamma",
    "compute_gamma",
    "gamma_b2_oracle",
    "clear_cache",
]

Perm = tuple[int, ...]

_Z = PolyZ.var("z")
_MU = PolyMZ.var("mu")


@dataclass(frozen=True)
class HeckeElement:
    strands: int
    combo: dict  # Perm -> PolyZ, no zero coefficients

    @classmethod
    def unit(cls, n: int) -> HeckeElement:
        return cls(n, {tuple(range(1, n + 1)): PolyZ.one()})

    @classmethod
    def basis(cls, perm: Perm, coeff: PolyZ | None = None) -> HeckeElement:
        return cls(len(perm), {tuple(perm): PolyZ.one() if coeff is None else coeff})

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.combo)
        for w, c in other.combo.items():
            _accumulate(out, w, c)
        return HeckeElement(self.strands, out)

    def scale(self, c: PolyZ) -> HeckeElement:
        if c.is_zero():
            return HeckeElement(self.strands, {})
        return HeckeElement(self.strands, {w: a * c for w, a in self.combo.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.strands == other.strands and self.combo == other.combo

    __hash__ = None


def _accumulate(out: dict, w: Perm, c: PolyZ) -> None:
    s = out[w] + c if w in out else c
    if s.is_zero():
        out.pop(w, None)
    else:
        out[w] = s


def _swap_positions(w: Perm, i: int) -> Perm:
    # w * s_i: exchange positions i, i+1 (1-based)
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def _swap_values(w: Perm, i: int) -> Perm:
    # s_i * w: exchange the values i, i+1
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def _times_positive(combo: dict, i: int, left: bool) -> dict:
    out: dict = {}
    for w, c in combo.items():
        if left:
            ws = _swap_values(w, i)
            longer = w.index(i) < w.index(i + 1)
        else:
            ws = _swap_positions(w, i)
            longer = w[i - 1] < w[i]
        if longer:
            _accumulate(out, ws, c)
        else:
            # T_w T_i = T_{w s_i} T_i^2 = z T_w + T_{w s_i}
            _accumulate(out, w, c * _Z)
            _accumulate(out, ws, c)
    return out


def _multiply(h: HeckeElement, letter: int, left: bool) -> HeckeElement:
    i = abs(letter)
    if not 1 <= i < h.strands:
        raise GeneratorOutOfRange(f"generator {letter} out of range for {h.strands} strands")
    out = _times_positive(h.combo, i, left)
    if letter < 0:
        for w, c in h.combo.items():
            _accumulate(out, w, -(c * _Z))
    return HeckeElement(h.strands, out)


def right_multiply(h: HeckeElement, letter: int) -> HeckeElement:
    """h * sigma_|letter|^sign(letter)."""
    return _multiply(h, letter, left=False)


def left_multiply(h: HeckeElement, letter: int) -> HeckeElement:
    """sigma_|letter|^sign(letter) * h."""
    return _multiply(h, letter, left=True)


def normal_factor(w: Perm) -> tuple[Perm, int]:
    """Split w (with w(n) != n) as u * s_{n-1} s_{n-2} ... s_k, lengths adding.

    Returns ``(u, k)`` with u a permutation of 1..n-1 and k the position of
    n in the one-line notation of w.
    """
    n = len(w)
    k = w.index(n) + 1
    u = tuple(x for x in w if x != n)
    return u, k


@lru_cache(maxsize=None)
def _basis_trace(w: Perm) -> PolyMZ:
    n = len(w)
    if n == 1:
        return PolyMZ.one()
    if w[-1] == n:
        return _MU * _basis_trace(w[:-1])
    u, k = normal_factor(w)
    # tr(T_u T_{n-1} ... T_k) = tr_{n-1}(T_{n-2} ... T_k T_u) by cyclicity
    x = HeckeElement.basis(u)
    for i in range(k, n - 1):
        x = left_multiply(x, i)
    return markov_trace(x)


def markov_trace(h: HeckeElement) -> PolyMZ:
    total = PolyMZ.zero()
    for w, c in h.combo.items():
        total = total + PolyMZ.from_z(c) * _basis_trace(w)
    return total


@dataclass(frozen=True)
class GammaResult:
    value: PolyMZ
    strands: int
    exponent_sum: int
    components: int


def compute_gamma(w: BraidWord) -> PolyMZ:
    """Gamma of the closure of ``w``, with no memoization of the word."""
    h = HeckeElement.unit(w.strands)
    for x in w.letters:
        h = right_multiply(h, x)
    return markov_trace(h)


_cache: dict[str, PolyMZ] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def gamma(w: BraidWord, use_cache: bool = True) -> GammaResult:
    info = closure_info(w)
    value = None
    key = canonical_cyclic_key(w) if use_cache else None
    if key is not None:
        with _cache_lock:
            value = _cache.get(key)
    if value is None:
        value = compute_gamma(w)
        if key is not None:
            with _cache_lock:
                _cache.setdefault(key, value)
    return GammaResult(value, w.strands, w.exponent_sum, info.components)


def gamma_b2_oracle(k: int) -> PolyMZ:
    """Gamma of the closure of sigma_1^k in B_2 by the two-term recursion.

    Gamma(s^k) = z Gamma(s^(k-1)) + Gamma(s^(k-2)), started from
    Gamma(s^0) = mu and Gamma(s^1) = 1, run backwards for k < 0.
    """
    z = PolyMZ.var("z")
    prev, cur = _MU, PolyMZ.one()  # k = 0, 1
    if k == 0:
        return prev
    if k > 0:
        for _ in range(k - 1):
            prev, cur = cur, z * cur + prev
        return cur
    # Gamma(s^(j-2)) = Gamma(s^j) - z Gamma(s^(j-1))
    hi, lo = cur, prev  # s^1, s^0
    for _ in range(-k):
        hi, lo = lo, hi - z * lo
    return lo
