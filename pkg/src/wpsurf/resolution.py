"""Cyclic quotient singularities of quasi-smooth surfaces, their
Hirzebruch-Jung resolutions, and the resolved surface invariants.

A coordinate point P_i of P(a_0..a_3) with h = a_i > 1 is a Z/h quotient
point of the ambient space.  It lies on V(F) iff F has no x_i^(d/h) term;
quasi-smoothness then forces a monomial x_i^r * x_j, whose variable x_j is
eliminated locally, leaving the two remaining coordinates (x_k, x_l) as a
chart on which Z/h acts with weights (a_k, a_l) — a quotient singularity of
type 1/h(a_k, a_l).  Resolving it produces the Hirzebruch-Jung chain of the
continued-fraction expansion of h/q' and rational discrepancies solved from
the adjunction equations on the chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import InvalidInput, NotQuasismooth, UnsupportedConfiguration
from .hodge import hodge_numbers
from .poly import FamilySymbol, WPolynomial, singular_strata, symbol

__all__ = [
    "QuotientSingularity",
    "HJChain",
    "SurfaceInvariantReport",
    "detect_singularities",
    "hj_chain",
    "discrepancy",
    "invariant_report",
]


def _normalize_type(h: int, p: int, q: int) -> int:
    """q' with 1/h(p,q) = 1/h(1,q'), i.e. q' = q * p^(-1) mod h."""
    if gcd(h, p) != 1 or gcd(h, q) != 1:
        raise InvalidInput(f"type 1/{h}({p},{q}) is not isolated: non-coprime pair")
    return (q * pow(p, -1, h)) % h


@dataclass(frozen=True)
class QuotientSingularity:
    """Quotient point of order h at coordinate point index ``location``.

    ``raw`` is the unnormalized weight pair (a_k mod h, a_l mod h) of the
    surviving chart coordinates; ``normalized`` the q' of the equivalent type
    1/h(1, q'); ``canonical`` = min(q', q'^(-1) mod h) names the singularity
    independently of chain orientation.  ``eliminated`` is the variable index
    removed by the implicit function theorem.
    """

    location: int
    order: int
    raw: tuple[int, int]
    normalized: int
    eliminated: int

    def __post_init__(self) -> None:
        assert 1 <= self.normalized < self.order

    @property
    def canonical(self) -> int:
        return min(self.normalized, pow(self.normalized, -1, self.order))

    def __str__(self) -> str:
        return f"1/{self.order}(1,{self.normalized}) at P{self.location}"


def detect_singularities(F: WPolynomial) -> list[QuotientSingularity]:
    """Quotient singularities of V(F) at the coordinate points of the ambient
    space.  Requires all ambient singular strata to be isolated points."""
    if not F:
        raise InvalidInput("zero polynomial defines no hypersurface")
    w = F.weights
    if not w.well_formed():
        raise InvalidInput(f"weights {tuple(w)} are not well formed")
    d = F.degree()
    n = len(w)
    for subset, h in singular_strata(w):
        if len(subset) > 1:
            raise UnsupportedConfiguration(
                f"ambient stratum x{subset} has stabilizer of order {h}; only "
                "isolated singular points are supported"
            )

    support = F.support()
    out: list[QuotientSingularity] = []
    for i in range(n):
        h = w[i]
        if h <= 1:
            continue
        if d % h == 0:
            pure = tuple(d // h if t == i else 0 for t in range(n))
            if pure in support:
                # F(P_i) != 0: the surface misses this ambient quotient point.
                continue
        # Quasi-smoothness at P_i requires some monomial x_i^r * x_j; x_j is
        # the coordinate eliminated near the point.
        carried = sorted(
            {
                j
                for j in range(n)
                if j != i
                for e in support
                if e[j] == 1 and e[i] == sum(e) - 1
            }
        )
        if not carried:
            raise NotQuasismooth(
                f"coordinate point P{i} lies on the surface but no monomial "
                f"of the form x{i}^r*xj supplies a gradient direction"
            )
        j = carried[0]
        k, l = (t for t in range(n) if t not in (i, j))
        raw = (w[k] % h, w[l] % h)
        out.append(
            QuotientSingularity(
                location=i,
                order=h,
                raw=raw,
                normalized=_normalize_type(h, raw[0], raw[1]),
                eliminated=j,
            )
        )
    return out


@dataclass(frozen=True)
class HJChain:
    """Hirzebruch-Jung chain: exceptional curves E_1..E_k with E_i^2 = -c_i,
    consecutive curves meeting once."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries or any(c < 2 for c in self.entries):
            raise InvalidInput("chain entries must all be >= 2")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def value(self) -> Fraction:
        """The continued fraction c_1 - 1/(c_2 - 1/(...))."""
        acc = Fraction(self.entries[-1])
        for c in reversed(self.entries[:-1]):
            acc = c - 1 / acc
        return acc

    def self_intersections(self) -> tuple[int, ...]:
        return tuple(-c for c in self.entries)


def hj_chain(h: int, q: int) -> HJChain:
    """Expansion h/q = c_1 - 1/(c_2 - ...) by iterated ceiling division."""
    if not (1 <= q < h):
        raise InvalidInput(f"need 1 <= q < h, got q={q}, h={h}")
    if gcd(h, q) != 1:
        raise InvalidInput(f"h={h} and q={q} must be coprime")
    entries = []
    while q:
        c = -(-h // q)
        entries.append(c)
        h, q = q, c * q - h
    return HJChain(tuple(entries))


def discrepancy(chain: HJChain) -> tuple[tuple[Fraction, ...], Fraction]:
    """Discrepancy coefficients d_i of the chain curves and the exact
    self-intersection of the discrepancy divisor Delta = sum d_i E_i.

    The d_i solve the adjunction equations sum_j d_j (E_i . E_j) = -2 - E_i^2
    on the chain Gram matrix (E_i^2 = -c_i, adjacent intersections 1)."""
    k = len(chain.entries)
    gram = [[Fraction(0)] * k for _ in range(k)]
    for i, c in enumerate(chain.entries):
        gram[i][i] = Fraction(-c)
        if i + 1 < k:
            gram[i][i + 1] = gram[i + 1][i] = Fraction(1)
    rhs = [Fraction(-2 + c) for c in chain.entries]

    # Exact Gaussian elimination; the chain Gram is negative definite, so the
    # system is uniquely solvable.
    A = [row[:] + [b] for row, b in zip(gram, rhs)]
    for col in range(k):
        piv = next(r for r in range(col, k) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        scale = A[col][col]
        A[col] = [v / scale for v in A[col]]
        for r in range(k):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    coeffs = tuple(A[r][k] for r in range(k))
    delta_sq = sum(d * b for d, b in zip(coeffs, rhs))
    return coeffs, delta_sq


@dataclass(frozen=True)
class SurfaceInvariantReport:
    """Numerical invariants of the quasi-smooth surface X = V(F) and its
    minimal resolution of quotient points."""

    symbol: FamilySymbol
    hodge: tuple[int, int, int]
    euler_x: int
    euler_resolved: int
    chi: int
    o1_squared: Fraction
    k_squared: Fraction
    singularities: tuple[QuotientSingularity, ...]
    chains: tuple[HJChain, ...]
    discrepancies: tuple[tuple[Fraction, ...], ...]
    delta_squares: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert self.k_squared + self.euler_resolved == 12 * self.chi, (
            f"Noether violated: K^2={self.k_squared}, e={self.euler_resolved}, "
            f"chi={self.chi}"
        )


def invariant_report(sym: FamilySymbol, F: WPolynomial) -> SurfaceInvariantReport:
    if len(sym.weights) != 4:
        raise InvalidInput("invariant reports cover the surface case only")
    if tuple(F.weights) != tuple(sym.weights) or F.degree() != sym.degree:
        raise InvalidInput(f"polynomial does not belong to the family {sym}")

    h20, h11p, h02 = hodge_numbers(sym)
    b2 = 2 * h20 + h11p + 1
    euler_x = 2 + b2
    chi = 1 + h20

    sings = tuple(detect_singularities(F))
    chains = tuple(hj_chain(s.order, s.normalized) for s in sings)
    disc = tuple(discrepancy(c) for c in chains)

    euler_resolved = euler_x - len(sings) + sum(len(c) + 1 for c in chains)
    o1_sq = Fraction(sym.degree, prod(sym.weights))
    k_sq = o1_sq + sum((d2 for _, d2 in disc), Fraction(0))

    return SurfaceInvariantReport(
        symbol=sym,
        hodge=(h20, h11p, h02),
        euler_x=euler_x,
        euler_resolved=euler_resolved,
        chi=chi,
        o1_squared=o1_sq,
        k_squared=k_sq,
        singularities=sings,
        chains=chains,
        discrepancies=tuple(d for d, _ in disc),
        delta_squares=tuple(d2 for _, d2 in disc),
    )
