"""Exact Homfly polynomials of closed braids in the (mu, z) parametrization."""

__version__ = "0.1.0"

from .braid import BraidWord, closure_info, parse
from .hecke import GammaResult, gamma
from .poly import LaurentT, LaurentVZ, PolyMu, PolyMZ, PolyZ, binomial_series, substitute_mu

__all__ = [
    "BraidWord",
    "GammaResult",
    "LaurentT",
    "LaurentVZ",
    "PolyMu",
    "PolyMZ",
    "PolyZ",
    "binomial_series",
    "closure_info",
    "gamma",
    "parse",
    "substitute_mu",
]
