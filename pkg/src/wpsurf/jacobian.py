"""Graded pieces of Jacobian rings and multiplication kernels, computed by
exact integer elimination.

For a weighted-homogeneous F the degree-k piece of the Jacobian ideal J_F is
spanned by the products m * dF/dx_i over monomials m of degree k - deg dF/dx_i.
We echelonize those rows over Z (columns indexed by the degree-k monomials in
descending graded-lex order, x0 most significant) and read off:

  * dim (J_F)_k as the rank,
  * a monomial basis of (R/J_F)_k as the non-pivot columns — exactly the
    monomials that are not leading monomials of any element of (J_F)_k,
    i.e. the standard monomials for this term order.

Multiplication kernels ker(*g : (R/J)_k -> (R/J)_(k+w)) come from the same
echelon: quotient-basis rows that die against J_(k+w) + earlier products give
an integral kernel basis directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInput, NotQuasismooth
from .linalg import IntEchelon, clear_denominators, ech_insert_reduced
from .poly import (
    Exponent,
    WPolynomial,
    enumerate_monomials,
    monomial,
    partial_derivative,
    variable,
)

__all__ = [
    "GradedPiece",
    "KernelReport",
    "graded_piece",
    "multiplication_kernel",
    "torelli_test",
]


@dataclass(frozen=True)
class GradedPiece:
    """Degree-k data of R = C[x]/J_F: ambient monomials, Jacobian rank, and a
    monomial basis of the quotient."""

    degree: int
    monomials: tuple[Exponent, ...]
    dim_ring: int
    dim_jacobian: int
    dim_quotient: int
    quotient_basis: tuple[Exponent, ...]
    _echelon: IntEchelon = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        assert self.dim_ring == self.dim_jacobian + self.dim_quotient


def _jacobian_rows(
    F: WPolynomial, k: int, monos: tuple[Exponent, ...]
) -> list[list[int]]:
    """Integer row vectors spanning (J_F)_k in the basis `monos`."""
    w = F.weights
    d = F.degree()
    col = {m: j for j, m in enumerate(monos)}
    rows: list[list[int]] = []
    for i in range(len(w)):
        g = partial_derivative(F, i)
        if not g:
            continue
        mdeg = k - (d - w[i])
        if mdeg < 0:
            continue
        gterms = g.terms
        for m in enumerate_monomials(w, mdeg):
            row = [Fraction(0)] * len(monos)
            for e, c in gterms.items():
                prodexp = tuple(a + b for a, b in zip(m, e))
                row[col[prodexp]] += c
            rows.append(clear_denominators(row))
    return rows


def graded_piece(F: WPolynomial, k: int) -> GradedPiece:
    if not F:
        raise InvalidInput("zero polynomial has no Jacobian ring")
    if k < 0:
        raise InvalidInput("degree must be non-negative")
    monos = tuple(enumerate_monomials(F.weights, k))
    ech = IntEchelon(len(monos))
    for row in _jacobian_rows(F, k, monos):
        ech.insert(row)
    pivots = set(ech.pivot_cols)
    basis = tuple(m for j, m in enumerate(monos) if j not in pivots)
    return GradedPiece(
        degree=k,
        monomials=monos,
        dim_ring=len(monos),
        dim_jacobian=ech.rank,
        dim_quotient=len(monos) - ech.rank,
        quotient_basis=basis,
        _echelon=ech,
    )


@dataclass(frozen=True)
class KernelReport:
    """Kernel of multiplication by g from (R/J)_k to (R/J)_(k + deg g)."""

    source_degree: int
    multiplier: WPolynomial
    kernel_dimension: int
    kernel_basis: tuple[WPolynomial, ...]
    dim_quotient_source: int
    dim_quotient_target: int
    rank_of_map: int

    def __post_init__(self) -> None:
        assert self.kernel_dimension + self.rank_of_map == self.dim_quotient_source


def multiplication_kernel(F: WPolynomial, g: WPolynomial, k: int) -> KernelReport:
    """Exact kernel of the multiplication map *g on quotient pieces.

    The returned basis consists of integer combinations of the degree-k
    quotient-basis monomials (primitive, leading coefficient positive).
    """
    if not g:
        raise InvalidInput("multiplier must be non-zero")
    if g.weights != F.weights:
        raise InvalidInput("multiplier lives in a different weighted ring")
    w = g.degree()
    source = graded_piece(F, k)
    target = graded_piece(F, k + w)

    width = len(target.monomials)
    col = {m: j for j, m in enumerate(target.monomials)}
    ech = IntEchelon(width)
    for row in _jacobian_rows(F, k + w, target.monomials):
        ech.insert(row)
    rank_j = ech.rank
    assert rank_j == target.dim_jacobian

    gterms = g.terms
    nq = len(source.quotient_basis)
    kernel_rows: list[list[int]] = []
    for idx, q in enumerate(source.quotient_basis):
        row = [Fraction(0)] * (width + nq)
        for e, c in gterms.items():
            prodexp = tuple(a + b for a, b in zip(q, e))
            row[col[prodexp]] += c
        row[width + idx] = Fraction(1)
        row = clear_denominators(row)
        reduced = ech.reduce(row)
        if any(reduced[:width]):
            ech_insert_reduced(ech, reduced)
        else:
            kernel_rows.append(reduced[width:])

    basis = []
    for vec in kernel_rows:
        combo = WPolynomial(F.weights, {})
        for c, q in zip(vec, source.quotient_basis):
            if c:
                combo = combo + monomial(F.weights, q, c)
        basis.append(combo)
    rank_map = ech.rank - rank_j
    return KernelReport(
        source_degree=k,
        multiplier=g,
        kernel_dimension=len(kernel_rows),
        kernel_basis=tuple(basis),
        dim_quotient_source=source.dim_quotient,
        dim_quotient_target=target.dim_quotient,
        rank_of_map=rank_map,
    )


def torelli_test(F: WPolynomial) -> KernelReport:
    """Kernel of multiplication by x0 from (R/J)_d to (R/J)_(d+1) — the
    obstruction space for generic-Torelli-type arguments.  Refuses polynomials
    that are not quasi-smooth (their Jacobian ring is not finite-dimensional,
    so the graded dimensions carry no geometric meaning)."""
    from .quasismooth import is_quasismooth

    cert = is_quasismooth(F)
    if not cert.verdict:
        raise NotQuasismooth(
            f"polynomial is not quasi-smooth (non-zero Milnor piece in degree "
            f"{cert.failing_degree}); multiplication kernels are undefined",
            certificate=cert,
        )
    return multiplication_kernel(F, variable(F.weights, 0), F.degree())
