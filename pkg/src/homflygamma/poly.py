"""Exact sparse polynomials with Python integer coefficients.

Every value is immutable and stored as a dict from exponent tuples to
nonzero ints. Four public rings are used across the package:

* :class:`PolyMZ`    -- Z[mu, z], the home of Gamma
* :class:`LaurentVZ` -- Z[v^+-1, z^+-1], the standard Homfly polynomial
* :class:`PolyZ`     -- Z[z], coefficients of the Hecke engine
* :class:`LaurentT`  -- Z[t^+-1], Burau entries and Alexander polynomials

plus :class:`PolyMu` for the univariate coefficients p_j(mu).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import comb
from typing import ClassVar, TypeVar

__all__ = [
    "PolyMZ",
    "LaurentVZ",
    "PolyZ",
    "PolyMu",
    "LaurentT",
    "binomial_series",
    "substitute_mu",
]

P = TypeVar("P", bound="_SparsePoly")


class _SparsePoly:
    variables: ClassVar[tuple[str, ...]] = ()
    laurent: ClassVar[bool] = False

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | int | None = None):
        nvars = len(self.variables)
        clean: dict[tuple[int, ...], int] = {}
        if isinstance(terms, int):
            terms = {(0,) * nvars: terms}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                key = self._key(exps)
                clean[key] = clean.get(key, 0) + int(coeff)
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _key(cls, exps) -> tuple[int, ...]:
        if isinstance(exps, int):
            exps = (exps,)
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(cls.variables):
            raise ValueError(f"{cls.__name__} expects {len(cls.variables)} exponents, got {exps}")
        if not cls.laurent and any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {cls.__name__}: {exps}")
        return exps

    @classmethod
    def _make(cls: type[P], terms: dict[tuple[int, ...], int]) -> P:
        # trusted constructor: keys valid, zeros already pruned
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: type[P]) -> P:
        return cls._make({})

    @classmethod
    def one(cls: type[P]) -> P:
        return cls._make({(0,) * len(cls.variables): 1})

    @classmethod
    def monomial(cls: type[P], exps, coeff: int = 1) -> P:
        return cls({cls._key(exps): coeff})

    @classmethod
    def var(cls: type[P], name: str) -> P:
        exps = [0] * len(cls.variables)
        exps[cls.variables.index(name)] = 1
        return cls._make({tuple(exps): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coeff(self, exps) -> int:
        return self._terms.get(self._key(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, var: str | int = -1) -> int | None:
        """Largest exponent of ``var`` (None for the zero polynomial)."""
        i = self.variables.index(var) if isinstance(var, str) else var
        return max((k[i] for k in self._terms), default=None)

    def min_degree(self, var: str | int = -1) -> int | None:
        i = self.variables.index(var) if isinstance(var, str) else var
        return min((k[i] for k in self._terms), default=None)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        # last variable is the major key: series-style ordering in z
        return sorted(self._terms.items(), key=lambda kv: kv[0][::-1])

    def to_json_terms(self) -> list[list]:
        return [[*k, str(c)] for k, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls: type[P], rows: Iterable[Iterable]) -> P:
        return cls({tuple(r[:-1]): int(r[-1]) for r in rows})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)(other)
        return None

    def __add__(self: P, other) -> P:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._make(out)

    __radd__ = __add__

    def __neg__(self: P) -> P:
        return self._make({k: -c for k, c in self._terms.items()})

    def __sub__(self: P, other) -> P:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self: P, other) -> P:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self: P, other) -> P:
        if isinstance(other, int):
            if other == 0:
                return self.zero()
            return self._make({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return self._make({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self: P, exponent: int) -> P:
        if exponent < 0:
            if self.laurent and len(self._terms) == 1:
                ((k, c),) = self._terms.items()
                if c in (1, -1):
                    return self._make({tuple(e * exponent for e in k): c ** -exponent})
            raise ValueError("negative powers only for Laurent unit monomials")
        result = self.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self: P, exps) -> P:
        """Multiply by the monomial with exponent vector ``exps``."""
        d = tuple(exps)
        return type(self)({tuple(a + b for a, b in zip(k, d)): c for k, c in self._terms.items()})

    def truncate(self: P, max_deg: int, var: str | int = -1) -> P:
        i = self.variables.index(var) if isinstance(var, str) else var
        return self._make({k: c for k, c in self._terms.items() if k[i] <= max_deg})

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = type(self)(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, k)
                if e != 0
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class PolyZ(_SparsePoly):
    variables = ("z",)
    __slots__ = ()


class PolyMu(_SparsePoly):
    """A univariate polynomial in mu; used for the coefficients p_j(mu)."""

    variables = ("mu",)
    __slots__ = ()

    def is_even(self) -> bool:
        return all(k[0] % 2 == 0 for k in self._terms)

    def is_odd(self) -> bool:
        return all(k[0] % 2 == 1 for k in self._terms)

    def coefficient_vector(self, size: int) -> list[int]:
        vec = [0] * size
        for (a,), c in self._terms.items():
            if a >= size:
                raise ValueError(f"mu-degree {a} does not fit a vector of size {size}")
            vec[a] = c
        return vec


class LaurentT(_SparsePoly):
    variables = ("t",)
    laurent = True
    __slots__ = ()

    def evaluate(self, t: int | Fraction) -> int | Fraction:
        t = Fraction(t)
        val = sum((c * t ** k[0] for k, c in self._terms.items()), Fraction(0))
        return int(val) if val.denominator == 1 else val

    def substitute_inverse(self) -> LaurentT:
        return self._make({(-k[0],): c for k, c in self._terms.items()})

    def exact_div(self, divisor: LaurentT) -> LaurentT:
        """Divide exactly; raise ArithmeticError on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return self.zero()
        lo_a, lo_b = self.min_degree(0), divisor.min_degree(0)
        num = {k[0] - lo_a: c for k, c in self._terms.items()}
        den = {k[0] - lo_b: c for k, c in divisor._terms.items()}
        dtop = max(den)
        lead = den[dtop]
        quot: dict[int, int] = {}
        while num:
            top = max(num)
            if top < dtop:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            q, r = divmod(num[top], lead)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {divisor} over Z")
            quot[top - dtop] = q
            for e, c in den.items():
                s = num.get(e + top - dtop, 0) - q * c
                if s:
                    num[e + top - dtop] = s
                else:
                    num.pop(e + top - dtop, None)
        shift = lo_a - lo_b
        return self._make({(e + shift,): c for e, c in quot.items()})


class PolyMZ(_SparsePoly):
    variables = ("mu", "z")
    __slots__ = ()

    @classmethod
    def from_z(cls, p: PolyZ) -> PolyMZ:
        return cls._make({(0, k[0]): c for k, c in p._terms.items()})

    @classmethod
    def from_mu(cls, p: PolyMu, z_exp: int = 0) -> PolyMZ:
        return cls._make({(k[0], z_exp): c for k, c in p._terms.items()})

    def coeff_in_z(self, j: int) -> PolyMu:
        """The polynomial p_j(mu) multiplying z^j."""
        return PolyMu._make({(a,): c for (a, b), c in self._terms.items() if b == j})

    def z_coefficients(self, upto: int | None = None) -> list[PolyMu]:
        top = self.degree("z") if upto is None else upto
        if top is None:
            return []
        return [self.coeff_in_z(j) for j in range(top + 1)]

    @classmethod
    def from_z_coefficients(cls, coeffs: Iterable[PolyMu]) -> PolyMZ:
        out = {}
        for j, p in enumerate(coeffs):
            for (a,), c in p._terms.items():
                out[(a, j)] = c
        return cls._make(out)

    def at_mu_zero(self) -> PolyZ:
        return PolyZ._make({(b,): c for (a, b), c in self._terms.items() if a == 0})


class LaurentVZ(_SparsePoly):
    variables = ("v", "z")
    laurent = True
    __slots__ = ()

    def mirror(self) -> LaurentVZ:
        """Apply v -> 1/v, z -> -z."""
        return self._make({(-a, b): (-c if b % 2 else c) for (a, b), c in self._terms.items()})


def binomial_series(m: int, max_deg: int) -> PolyMZ:
    """Taylor series of (1 - mu*z)^m truncated at z-degree ``max_deg``."""
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    out = {}
    for j in range(max_deg + 1):
        if m >= 0:
            if j > m:
                break
            c = (-1) ** j * comb(m, j)
        else:
            c = comb(-m + j - 1, j)
        out[(j, j)] = c
    return PolyMZ._make(out)


def substitute_mu(p: PolyMZ, e: int, n: int) -> LaurentVZ:
    """Homfly polynomial v^(e-n+1) * p((1-v^2)/z, z) of a braid closure."""
    one_minus_v2 = LaurentVZ({(0, 0): 1, (2, 0): -1})
    powers = [LaurentVZ.one()]
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in p._terms.items():
        while len(powers) <= a:
            powers.append(powers[-1] * one_minus_v2)
        for (va, _), pc in powers[a]._terms.items():
            key = (va + e - n + 1, b - a)
            out[key] = out.get(key, 0) + c * pc
    return LaurentVZ._make({k: c for k, c in out.items() if c})
