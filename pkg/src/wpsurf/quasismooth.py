"""Quasi-smoothness of weighted hypersurfaces and the amplitude-1 census.

Three layers:

* a fast necessary condition on the family symbol alone (every weight that
  does not divide the degree must admit a euclidean division ``d = r*b + g``
  with remainder ``g`` another weight, remainders pairwise distinct);
* a constructive layer that chains those divisions into cycles and writes
  down a basic member with unit coefficients (one pure power per terminal
  weight, one ``x^r * y`` link per division);
* an exact certificate: F is quasi-smooth iff its Milnor algebra R_F vanishes
  in every degree of the window (T, T + max a_i], where T = sum (d - 2 a_i)
  is the socle bound.  Vanishing there forces vanishing in all higher degrees
  (multiply any nonzero class down by a variable), so the window is decisive.

``enumerate_amplitude_one`` combines the layers into the census of degree
``a + b + 4`` surfaces in P(1, 2, a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from .errors import InvalidInput, UnsupportedConfiguration
from .hodge import poincare_series
from .jacobian import graded_piece
from .poly import FamilySymbol, WPolynomial, monomial, symbol

__all__ = [
    "DivisionWitness",
    "CycleDecomposition",
    "QuasiSmoothCertificate",
    "SubsetAdvisory",
    "division_witness_check",
    "cycle_decomposition",
    "is_quasismooth",
    "enumerate_amplitude_one",
    "subset_smoothness_advisory",
]


@dataclass(frozen=True)
class DivisionWitness:
    """Outcome of the necessary division condition on a family symbol.

    On success ``witnesses`` maps each non-dividing weight b to the chosen
    (r, g) with d = r*b + g; on failure ``violating`` names the first weight
    admitting no usable remainder.
    """

    symbol: FamilySymbol
    ok: bool
    witnesses: dict[int, tuple[int, int]]
    violating: int | None = None


def division_witness_check(sym: FamilySymbol) -> DivisionWitness:
    """Check that every weight not dividing d admits d = r*b + g with g
    another weight, choosing pairwise-distinct remainders (backtracking over
    candidate divisions, larger quotients first)."""
    d = sym.degree
    wts = list(sym.weights)
    if len(set(wts)) != len(wts):
        raise InvalidInput(f"weights of {sym} must be pairwise distinct")
    wset = set(wts)
    pending = [b for b in wts if d % b != 0]

    candidates: dict[int, list[tuple[int, int]]] = {}
    for b in pending:
        opts = []
        for r in range((d - 1) // b, 0, -1):
            g = d - r * b
            if g in wset:
                opts.append((r, g))
        candidates[b] = opts

    chosen: dict[int, tuple[int, int]] = {}
    used: set[int] = set()

    def assign(i: int) -> int | None:
        """Backtracking assignment; returns the first stuck weight or None."""
        if i == len(pending):
            return None
        b = pending[i]
        stuck: int | None = b
        for r, g in candidates[b]:
            if g in used:
                continue
            chosen[b] = (r, g)
            used.add(g)
            deeper = assign(i + 1)
            if deeper is None:
                return None
            stuck = deeper
            used.discard(g)
            del chosen[b]
        return stuck

    bad = assign(0)
    if bad is not None:
        return DivisionWitness(sym, False, {}, violating=bad)
    return DivisionWitness(sym, True, dict(chosen))


@dataclass(frozen=True)
class CycleDecomposition:
    """Partition of the weight indices into division chains, each ending at a
    weight dividing d, together with the basic member they define.

    ``cycles`` lists weight values per chain; ``exponents`` the matching
    exponents (r_j for each link, d/a for the terminal pure power).  The basic
    polynomial is sum over chains of
    x_{k_1}^{r_1} x_{k_2} + ... + x_{k_(s-1)}^{r_(s-1)} x_{k_s} + x_{k_s}^(d/a_{k_s}).
    """

    symbol: FamilySymbol
    cycles: tuple[tuple[int, ...], ...]
    exponents: tuple[tuple[int, ...], ...]
    basic_polynomial: WPolynomial

    def __post_init__(self) -> None:
        d = self.symbol.degree
        counted = sorted(v for cyc in self.cycles for v in cyc)
        assert counted == sorted(self.symbol.weights), "cycles must partition weights"
        for cyc in self.cycles:
            assert d % cyc[-1] == 0, "each chain must end at a dividing weight"


def cycle_decomposition(sym: FamilySymbol) -> CycleDecomposition:
    witness = division_witness_check(sym)
    if not witness.ok:
        raise InvalidInput(
            f"{sym} fails the division condition at weight {witness.violating}"
        )
    d = sym.degree
    wts = list(sym.weights)
    index_of = {a: i for i, a in enumerate(wts)}

    # Follow each non-dividing weight through the witness map until a weight
    # dividing d is reached.  Remainders are pairwise distinct, so the chains
    # never merge; a chain re-entering the non-dividing set without reaching a
    # terminal weight would cycle forever and is rejected.
    successors = {b: g for b, (_, g) in witness.witnesses.items()}
    chain_heads = [b for b in wts if b in successors and b not in successors.values()]
    consumed: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    exponents: list[tuple[int, ...]] = []

    for head in chain_heads:
        chain = [head]
        seen = {head}
        current = head
        while current in successors:
            nxt = successors[current]
            if nxt in seen:
                raise UnsupportedConfiguration(
                    f"division chain of {sym} starting at weight {head} never "
                    f"reaches a weight dividing {d}"
                )
            chain.append(nxt)
            seen.add(nxt)
            current = nxt
        cycles.append(tuple(chain))
        exps = [witness.witnesses[b][0] for b in chain[:-1]]
        exps.append(d // chain[-1])
        exponents.append(tuple(exps))
        consumed.update(chain)

    for a in wts:
        if a not in consumed:
            if a in successors:
                # Non-dividing weight reachable only through itself: the
                # division chains close up without ever hitting a terminal
                # weight, so no basic member of this shape exists.
                raise UnsupportedConfiguration(
                    f"division chains of {sym} loop among non-dividing "
                    f"weights (weight {a} never reaches a divisor of {d})"
                )
            cycles.append((a,))
            exponents.append((d // a,))

    n = len(wts)
    F = WPolynomial(sym.weights, {})
    for chain, exps in zip(cycles, exponents):
        idxs = [index_of[a] for a in chain]
        for j in range(len(chain) - 1):
            e = [0] * n
            e[idxs[j]] = exps[j]
            e[idxs[j + 1]] += 1
            F = F + monomial(sym.weights, tuple(e), 1)
        e = [0] * n
        e[idxs[-1]] = exps[-1]
        F = F + monomial(sym.weights, tuple(e), 1)

    return CycleDecomposition(sym, tuple(cycles), tuple(exponents), F)


@dataclass(frozen=True)
class QuasiSmoothCertificate:
    """Verdict plus the evidence: the socle bound T, the decisive window of
    degrees checked, the Milnor-algebra dimensions found there, and (on
    success) the total dimension sum_k dim(R_F)_k computed degree by degree."""

    verdict: bool
    socle_bound: int
    window: tuple[int, int]
    window_dimensions: tuple[int, ...]
    total_dimension: int | None = None
    failing_degree: int | None = None


def is_quasismooth(F: WPolynomial) -> QuasiSmoothCertificate:
    """Decide quasi-smoothness of V(F) away from the cone point by checking
    that the Milnor algebra vanishes throughout (T, T + max a_i]."""
    if not F:
        raise InvalidInput("zero polynomial defines no hypersurface")
    d = F.degree()
    wts = F.weights
    T = sum(d - 2 * a for a in wts)
    if T < 0:
        raise InvalidInput("socle bound is negative; family out of scope")
    window = (T + 1, T + max(wts))

    dims = []
    failing = None
    for k in range(window[0], window[1] + 1):
        dim = graded_piece(F, k).dim_quotient
        dims.append(dim)
        if dim and failing is None:
            failing = k
    if failing is not None:
        return QuasiSmoothCertificate(
            verdict=False,
            socle_bound=T,
            window=window,
            window_dimensions=tuple(dims),
            failing_degree=failing,
        )

    total = sum(graded_piece(F, k).dim_quotient for k in range(T + 1))
    expected = prod(Fraction(d - a, a) for a in wts)
    assert total == expected, (
        f"finite-dimensional Milnor algebra has dimension {total}, "
        f"generating series predicts {expected}"
    )
    return QuasiSmoothCertificate(
        verdict=True,
        socle_bound=T,
        window=window,
        window_dimensions=tuple(dims),
        total_dimension=total,
    )


def enumerate_amplitude_one(max_b: int) -> list[FamilySymbol]:
    """Census of quasi-smooth surfaces of degree a + b + 4 in P(1, 2, a, b)
    over coprime odd pairs 3 <= a <= b <= max_b: symbols passing the division
    condition whose basic member is certified quasi-smooth, sorted by degree."""
    if max_b < 3:
        return []
    found: list[FamilySymbol] = []
    for a in range(3, max_b + 1, 2):
        for b in range(a, max_b + 1, 2):
            if gcd(a, b) != 1:
                continue
            sym = symbol(a + b + 4, [1, 2, a, b])
            if not division_witness_check(sym).ok:
                continue
            basic = cycle_decomposition(sym).basic_polynomial
            if is_quasismooth(basic).verdict:
                found.append(sym)
    return sorted(found, key=lambda s: (s.degree, tuple(s.weights)))


@dataclass(frozen=True)
class SubsetAdvisory:
    """Advisory evaluation of the classical subset criterion for hypersurface
    quasi-smoothness, under both readings of the 'extra variable' clause.

    For each non-empty subset I of variable indices, F must either contain a
    monomial supported inside I, or contain |I| monomials of the form m * x_e
    with m supported inside I and the extra variables e pairwise distinct.
    The readings differ in whether each m must involve *every* variable of I
    (strict) or merely be supported inside I (loose).
    """

    loose_ok: bool
    strict_ok: bool
    failing_subsets_loose: tuple[tuple[int, ...], ...]
    failing_subsets_strict: tuple[tuple[int, ...], ...]

    @property
    def readings_disagree(self) -> bool:
        return self.loose_ok != self.strict_ok


def _subset_ok(F: WPolynomial, I: tuple[int, ...], strict: bool) -> bool:
    iset = set(I)
    extras: set[int] = set()
    for e in F.support():
        supp = {i for i, v in enumerate(e) if v}
        if supp <= iset:
            if not strict or supp == iset:
                return True
        outside = supp - iset
        if len(outside) == 1:
            j = next(iter(outside))
            if e[j] == 1:
                inner = supp & iset
                if not strict or inner == iset:
                    extras.add(j)
    return len(extras) >= len(I)


def subset_smoothness_advisory(F: WPolynomial) -> SubsetAdvisory:
    if not F:
        raise InvalidInput("zero polynomial defines no hypersurface")
    n = len(F.weights)
    fail_loose: list[tuple[int, ...]] = []
    fail_strict: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        for I in combinations(range(n), size):
            if not _subset_ok(F, I, strict=False):
                fail_loose.append(I)
            if not _subset_ok(F, I, strict=True):
                fail_strict.append(I)
    return SubsetAdvisory(
        loose_ok=not fail_loose,
        strict_ok=not fail_strict,
        failing_subsets_loose=tuple(fail_loose),
        failing_subsets_strict=tuple(fail_strict),
    )
