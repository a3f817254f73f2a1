"""Hodge numbers, moduli counts, and Milnor numbers from generating series.

For a quasi-smooth hypersurface of degree ``d`` in P(a_0..a_n), the graded
dimensions of the Milnor algebra R_F = C[x]/J_F are independent of the
(quasi-smooth) member and are generated by

    sum_k mu_k z^k  =  prod_i (1 - z^(d - a_i)) / (1 - z^(a_i)).

The top nonzero degree is the socle bound T = sum_i (d - 2 a_i); when the
rational function above is a polynomial the coefficients satisfy the duality
``mu_k = mu_(T-k)`` and sum to ``prod (d - a_i) / a_i``.  Hodge numbers of the
hypersurface are read off at degrees ``j*d - N`` and the projective moduli
count at degree ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .errors import InvalidInput
from .poly import FamilySymbol

__all__ = [
    "PoincareSeries",
    "HodgeVector",
    "poincare_series",
    "hodge_numbers",
    "moduli_count",
    "milnor_number",
]


@dataclass(frozen=True)
class PoincareSeries:
    """Graded dimensions mu_0..mu_T of the Milnor algebra of a family."""

    symbol: FamilySymbol
    coefficients: tuple[int, ...]
    is_polynomial: bool = field(default=True)

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise InvalidInput("series must start with mu_0 = 1")
        if self.is_polynomial:
            # These are theorems for genuine (polynomial) Milnor series; a
            # violation indicates an implementation bug, not bad input.
            T = len(self.coefficients) - 1
            mu = self.coefficients
            assert all(mu[k] == mu[T - k] for k in range(T + 1)), "duality broken"
            d = self.symbol.degree
            total = prod(Fraction(d - a, a) for a in self.symbol.weights)
            assert sum(mu) == total, "total dimension mismatch"

    @property
    def socle_bound(self) -> int:
        return len(self.coefficients) - 1

    def mu(self, k: int) -> int:
        """Coefficient mu_k; degrees outside [0, T] read as zero."""
        if 0 <= k <= self.socle_bound:
            return self.coefficients[k]
        return 0


@dataclass(frozen=True)
class HodgeVector:
    """Primitive Hodge numbers [h^(n,0), ..., h^(1,n-1)] of the hypersurface;
    for surfaces: [h^(2,0), h^(1,1)_prim, h^(0,2)]."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.entries and self.entries[0] != self.entries[-1]:
            raise InvalidInput("Hodge vector must be palindromic")

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)


def _series_coefficients(sym: FamilySymbol) -> tuple[list[int], bool]:
    """Dense coefficients of prod (1-z^(d-a_i))/(1-z^(a_i)) through degree T,
    plus whether the rational function is a genuine polynomial of degree T."""
    d = sym.degree
    wts = list(sym.weights)
    T = sum(d - 2 * a for a in wts)

    # Numerator as a dense polynomial (exact, small degrees).
    num = [1]
    for a in wts:
        e = d - a
        new = [0] * (len(num) + e)
        for i, c in enumerate(num):
            new[i] += c
            new[i + e] -= c
        num = new
    # Exact polynomial division by each (1 - z^a): quotient via the recurrence
    # out[j] = in[j] + out[j-a]; the division is exact iff the final remainder
    # (terms beyond the quotient degree) vanishes, which we detect by checking
    # that the full-length quotient is zero past its expected degree.
    quot = num
    exact = True
    for a in wts:
        out = list(quot)
        for j in range(a, len(out)):
            out[j] += out[j - a]
        # series of quot/(1-z^a) truncated at len(out); the true quotient has
        # degree deg(quot) - a when division is exact.
        quot = out
    # A genuine polynomial must vanish beyond degree T.
    if any(c != 0 for c in quot[T + 1 :]):
        exact = False
    coeffs = quot[: T + 1] + [0] * max(0, T + 1 - len(quot))
    return coeffs, exact


def poincare_series(sym: FamilySymbol) -> PoincareSeries:
    d = sym.degree
    if any(d <= a for a in sym.weights):
        raise InvalidInput(f"degree {d} must exceed every weight of {sym}")
    if sum(d - 2 * a for a in sym.weights) < 0:
        raise InvalidInput(f"socle bound of {sym} is negative")
    coeffs, exact = _series_coefficients(sym)
    return PoincareSeries(sym, tuple(coeffs), is_polynomial=exact)


def hodge_numbers(sym: FamilySymbol) -> HodgeVector:
    """[mu_(d-N), mu_(2d-N), ..., mu_(n*d-N)] for n+1 weights; negative
    indices read as zero.  For surfaces this is [h^(2,0), h^(1,1)_prim, h^(0,2)]."""
    series = poincare_series(sym)
    n = len(sym.weights) - 1
    N = sym.weights.total
    return HodgeVector(tuple(series.mu(j * sym.degree - N) for j in range(1, n + 1)))


def moduli_count(sym: FamilySymbol) -> int:
    """Dimension mu_d of the projective moduli of the family."""
    return poincare_series(sym).mu(sym.degree)


def milnor_number(weights: list[Fraction]) -> Fraction:
    """prod (1/w_i - 1) for a quasi-homogeneous isolated singularity with
    normalized weights 0 < w_i < 1.  Integrality is the caller's claim."""
    result = Fraction(1)
    for w in weights:
        w = Fraction(w)
        if not 0 < w < 1:
            raise InvalidInput(f"normalized weight {w} outside (0,1)")
        result *= 1 / w - 1
    return result
