"""Framing-corrected Homfly coefficients and what they say about a closed braid.

Multiplying Gamma by (1 - mu*z)^((e-n+1)/2) removes the framing; the
z^k coefficient of the product is a Vassiliev invariant of order k. A knot
is called Homfly-k-trivial here when those coefficients agree with the
unknot's (all zero) for 1 <= j <= k. This is weaker than full k-triviality
and reports say so.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .braid import BraidWord, closure_info
from .errors import NotAKnot
from .hecke import GammaResult, gamma
from .poly import PolyMu, PolyMZ, binomial_series

__all__ = [
    "CorrectedSeries",
    "TrivialityReport",
    "corrected_series",
    "is_homfly_k_trivial",
    "theorem1_check",
    "gamma_from_series",
    "bennequin",
    "allowed_exponents",
]


@dataclass(frozen=True)
class CorrectedSeries:
    coefficients: tuple[PolyMu, ...]
    exponent_sum: int
    strands: int
    truncation: int

    @property
    def framing_power(self) -> int:
        return (self.exponent_sum - self.strands + 1) // 2

    def as_poly(self) -> PolyMZ:
        return PolyMZ.from_z_coefficients(self.coefficients)


@dataclass
class TrivialityReport:
    braid: BraidWord
    max_checked: int
    first_nonvanishing: int | None
    homfly_k_trivial_up_to: int
    bennequin: int
    exponent_sum: int
    allowed_exponents: list[int]
    constraint_satisfied: bool
    hypothesis_holds: bool
    theorem_consistent: bool
    series: list[str] = field(default_factory=list)
    notion: str = "homfly-trivial (Homfly-derived invariants only)"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["braid"] = {"strands": self.braid.strands, "letters": list(self.braid.letters)}
        return d


def _require_knot(g: GammaResult) -> None:
    if g.components != 1:
        raise NotAKnot(f"closure has {g.components} components, expected a knot")


def corrected_series(g: GammaResult, K: int) -> CorrectedSeries:
    _require_knot(g)
    if K < 0:
        raise ValueError("truncation must be nonnegative")
    m = (g.exponent_sum - g.strands + 1) // 2
    prod = (g.value * binomial_series(m, K)).truncate(K, "z")
    coeffs = tuple(prod.coeff_in_z(j) for j in range(K + 1))
    return CorrectedSeries(coeffs, g.exponent_sum, g.strands, K)


def _series_trivial(fs: CorrectedSeries, k: int) -> bool:
    return all(fs.coefficients[j].is_zero() for j in range(1, k + 1))


def _matches_unknot_gamma(g: GammaResult, k: int) -> bool:
    # p_i must equal the z^i coefficient of (1 - mu*z)^(-(e-n+1)/2)
    m = (g.exponent_sum - g.strands + 1) // 2
    target = binomial_series(-m, k)
    return g.value.truncate(k, "z") == target


def is_homfly_k_trivial(w: BraidWord, k: int) -> bool:
    g = gamma(w)
    _require_knot(g)
    fs = corrected_series(g, k)
    by_series = _series_trivial(fs, k)
    by_gamma = _matches_unknot_gamma(g, k)
    if by_series != by_gamma:
        raise AssertionError(f"triviality criteria disagree on '{w}' at degree {k}")
    return by_series


def bennequin(w: BraidWord) -> int:
    return w.exponent_sum - w.strands


def allowed_exponents(n: int) -> list[int]:
    return list(range(n - 1, -n, -2))


def theorem1_check(w: BraidWord, max_degree: int | None = None) -> TrivialityReport:
    """Triviality data plus the exponent-sum constraint for a closed n-braid knot.

    A Homfly-n-trivial knot given as a closed n-braid must have e in
    {n-1, n-3, ..., 1-n}, hence a negative Bennequin number. The check
    always runs to degree n at least, since that is what the constraint needs.
    """
    if not closure_info(w).is_knot:
        raise NotAKnot(f"closure of {w.strands}-braid '{w}' is not a knot")
    n = w.strands
    K = max(n, max_degree or 0)
    g = gamma(w)
    fs = corrected_series(g, K)
    first = next((j for j in range(1, K + 1) if not fs.coefficients[j].is_zero()), None)
    trivial_up_to = K if first is None else first - 1
    hypothesis = trivial_up_to >= n
    if hypothesis != _matches_unknot_gamma(g, n):
        raise AssertionError(f"triviality criteria disagree on '{w}' at degree {n}")
    allowed = allowed_exponents(n)
    satisfied = w.exponent_sum in allowed
    consistent = (not hypothesis) or (satisfied and bennequin(w) < 0)
    return TrivialityReport(
        braid=w,
        max_checked=K,
        first_nonvanishing=first,
        homfly_k_trivial_up_to=trivial_up_to,
        bennequin=bennequin(w),
        exponent_sum=w.exponent_sum,
        allowed_exponents=allowed,
        constraint_satisfied=satisfied,
        hypothesis_holds=hypothesis,
        theorem_consistent=consistent,
        series=[str(f) for f in fs.coefficients],
    )


def gamma_from_series(fs: CorrectedSeries, c_bound: int) -> PolyMZ:
    """Recover Gamma from its framing-corrected series up to z-degree c_bound.

    Exact whenever Gamma has z-degree at most ``c_bound``, e.g. for braids
    of word length <= c_bound.
    """
    if fs.truncation < c_bound:
        raise ValueError(f"series truncated at {fs.truncation} < c_bound {c_bound}")
    series = fs.as_poly().truncate(c_bound, "z")
    return (series * binomial_series(-fs.framing_power, c_bound)).truncate(c_bound, "z")
