"""Integral lattices with exact invariants, plus elliptic-fibration data.

Everything here is exact: Smith normal forms track unimodular transforms and
are re-verified on return; signatures come from rational symmetric
diagonalization; discriminant forms are computed on explicit generators of
L*/L read off the Smith transform, with quadratic values mod 2Z (even
lattices) and bilinear values mod Z.

Sign convention: the root-lattice constructors are POSITIVE definite;
negative-definite copies are written scale(root(...), -1) explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Literal, NamedTuple

from .errors import CapacityError, InvalidInput

__all__ = [
    "GramLattice",
    "DiscriminantForm",
    "GenusFingerprint",
    "GenusComparison",
    "FiberType",
    "FiberEuler",
    "TranscendentalCheck",
    "TranscendentalReport",
    "unit",
    "hyperbolic_U",
    "root",
    "scale",
    "direct_sum",
    "from_gram",
    "smith_normal_form",
    "signature",
    "discriminant_form",
    "disc_form_isomorphic",
    "genus_fingerprint",
    "genus_equal",
    "verify_transcendental",
    "dynkin_graph_lattice",
    "kodaira_fiber",
    "fiber_config_euler",
    "kodaira_dimension",
    "picard_from_configuration",
]


# ---------------------------------------------------------------------------
# lattices and constructors


@dataclass(frozen=True)
class GramLattice:
    """Free Z-module with integer Gram matrix (rows as tuple of tuples)."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise InvalidInput("Gram matrix must be square")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(i)):
            raise InvalidInput("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def det(self) -> int:
        return _int_det(self.gram)

    def nondegenerate(self) -> bool:
        return self.det() != 0

    def __str__(self) -> str:
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.gram)
        return f"GramLattice[{rows}]"


def from_gram(rows) -> GramLattice:
    try:
        mat = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"Gram matrix entries must be integers: {exc}") from None
    return GramLattice(mat)


def unit(a: int) -> GramLattice:
    """Rank-1 lattice <a>."""
    if a == 0:
        raise InvalidInput("unit lattice needs a non-zero self-product")
    return GramLattice(((a,),))


def hyperbolic_U() -> GramLattice:
    return GramLattice(((0, 1), (1, 0)))


def root(family: Literal["A", "D", "E"], n: int) -> GramLattice:
    """Positive-definite root lattice A_n (n>=1), D_n (n>=4), E_n (n in 6..8)."""
    if family == "A":
        if n < 1:
            raise InvalidInput("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        if n < 4:
            raise InvalidInput("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise InvalidInput("E_n needs n in {6,7,8}")
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    else:
        raise InvalidInput(f"unknown root family {family!r}")
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2
    for i, j in edges:
        gram[i][j] = gram[j][i] = -1
    return GramLattice(tuple(tuple(row) for row in gram))


def scale(L: GramLattice, m: int) -> GramLattice:
    """L(m): same module, form multiplied by m."""
    if m == 0:
        raise InvalidInput("scaling by zero degenerates the lattice")
    return GramLattice(tuple(tuple(m * v for v in row) for row in L.gram))


def direct_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(L.rank for L in lattices)
    gram = [[0] * n for _ in range(n)]
    at = 0
    for L in lattices:
        r = L.rank
        for i in range(r):
            for j in range(r):
                gram[at + i][at + j] = L.gram[i][j]
        at += r
    return GramLattice(tuple(tuple(row) for row in gram))


def _int_det(gram) -> int:
    """Fraction-free Bareiss determinant."""
    n = len(gram)
    if n == 0:
        return 1
    a = [list(row) for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(D, U, V) with U*M*V = D, U and V unimodular, D diagonal with
    d_1 | d_2 | ... and d_i >= 0.  Works for any rectangular integer matrix."""
    A = [[int(v) for v in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):  # col_dst += c * col_src
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # Find smallest-magnitude nonzero entry in the trailing block.
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                add_row(t, i, -(A[i][t] // A[t][t]))
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if A[t][j]:
                add_col(t, j, -(A[t][j] // A[t][t]))
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # Pivot must divide the whole trailing block for the invariant-factor
        # chain; if not, fold an offending row in and restart the step.
        offender = next(
            (
                i
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if A[i][j] % A[t][t] != 0
            ),
            None,
        )
        if offender is not None:
            add_row(offender, t, 1)
            continue
        t += 1

    rank_done = min(m, n)
    for i in range(rank_done):
        if A[i][i] < 0:
            A[i] = [-v for v in A[i]]
            U[i] = [-v for v in U[i]]

    # Exactness check: U * M * V == A (cheap at the sizes used here).
    MV = _mat_mul([list(r) for r in M], V)
    UMV = _mat_mul(U, MV)
    assert UMV == A, "Smith reduction lost exactness"
    return A, U, V


def _mat_mul(A, B):
    if not A or not B:
        return []
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def invariant_factors(L: GramLattice) -> tuple[int, ...]:
    """Non-unit diagonal entries of the Smith form of the Gram matrix."""
    if not L.nondegenerate():
        raise InvalidInput("invariant factors need a nondegenerate lattice")
    D, _, _ = smith_normal_form(L.gram)
    return tuple(D[i][i] for i in range(L.rank) if D[i][i] != 1)


# ---------------------------------------------------------------------------
# signature


def signature(L: GramLattice) -> tuple[int, int]:
    """(s, t) = numbers of positive/negative diagonal entries after exact
    symmetric diagonalization over Q.  s + t < rank iff L is degenerate."""
    n = L.rank
    A = [[Fraction(v) for v in row] for row in L.gram]
    pos = neg = 0
    for i in range(n):
        if A[i][i] == 0:
            j = next((r for r in range(i + 1, n) if A[r][i] != 0), None)
            if j is None:
                continue  # zero row: null direction
            if A[j][j] != 0:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                # x -> x + y move: diagonal becomes 2*A[i][j] != 0
                A[i] = [a + b for a, b in zip(A[i], A[j])]
                for row in A:
                    row[i] += row[j]
        piv = A[i][i]
        if piv == 0:
            continue
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            if A[r][i]:
                f = A[r][i] / piv
                A[r] = [a - f * b for a, b in zip(A[r], A[i])]
                for row in A:
                    row[r] -= f * row[i]
    return pos, neg


# ---------------------------------------------------------------------------
# discriminant forms


@dataclass(frozen=True)
class DiscriminantForm:
    """Finite form (A(L), b, q) on generators x_i of orders d_1 | d_2 | ...

    ``q_values[i]`` = x_i . x_i mod 2Z (only when the source lattice is even);
    ``b_matrix[i][j]`` = x_i . x_j mod Z.  Group elements are coefficient
    tuples mod the invariant factors.
    """

    invariant_factors: tuple[int, ...]
    even: bool
    q_values: tuple[Fraction, ...] | None
    b_matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors) if self.invariant_factors else 1

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def element_order(self, x: tuple[int, ...]) -> int:
        o = 1
        for xi, d in zip(x, self.invariant_factors):
            o_i = d // gcd(xi, d)
            o = o * o_i // gcd(o, o_i)
        return o

    def b(self, x: tuple[int, ...], y: tuple[int, ...]) -> Fraction:
        total = sum(
            (xi * yj * self.b_matrix[i][j]
             for i, xi in enumerate(x) for j, yj in enumerate(y)),
            Fraction(0),
        )
        return total % 1

    def q(self, x: tuple[int, ...]) -> Fraction:
        if self.q_values is None:
            raise InvalidInput("quadratic values undefined for an odd lattice")
        total = sum(
            (xi * xi * qi for xi, qi in zip(x, self.q_values)), Fraction(0)
        ) + 2 * sum(
            (x[i] * x[j] * self.b_matrix[i][j]
             for i in range(len(x)) for j in range(i + 1, len(x))),
            Fraction(0),
        )
        return total % 2

    def negated(self) -> "DiscriminantForm":
        return DiscriminantForm(
            self.invariant_factors,
            self.even,
            tuple((-v) % 2 for v in self.q_values) if self.q_values is not None else None,
            tuple(tuple((-v) % 1 for v in row) for row in self.b_matrix),
        )


def discriminant_form(L: GramLattice) -> DiscriminantForm:
    if not L.nondegenerate():
        raise InvalidInput("discriminant form needs det != 0")
    n = L.rank
    D, _, V = smith_normal_form(L.gram)
    # A(L) = Z^n / G Z^n via U; the class of the i-th Smith generator lifts to
    # v_i = (1/d_i) * (column i of V) in L* (check: d_i v_i = V e_i in Z^n and
    # G v_i is integral because U G V = D).
    gens = []
    orders = []
    for i in range(n):
        d = D[i][i]
        if d == 1:
            continue
        orders.append(d)
        gens.append([Fraction(V[r][i], d) for r in range(n)])
    def dot(x, y):
        return sum(
            (x[r] * L.gram[r][c] * y[c] for r in range(n) for c in range(n)),
            Fraction(0),
        )

    b = tuple(tuple(dot(x, y) % 1 for y in gens) for x in gens)
    q = tuple(dot(x, x) % 2 for x in gens) if L.even else None
    return DiscriminantForm(tuple(orders), L.even, q, b)


def disc_form_isomorphic(
    f1: DiscriminantForm, f2: DiscriminantForm, bound: int = 10_000
) -> bool:
    """Brute-force isomorphism test between finite forms: group isomorphisms
    matching the quadratic values (both sources even) or bilinear values."""
    if f1.invariant_factors != f2.invariant_factors:
        return False
    if f1.order > bound:
        raise CapacityError(
            f"discriminant group order {f1.order} exceeds bound {bound}"
        )
    use_q = f1.even and f2.even and f1.q_values is not None and f2.q_values is not None

    def value(f: DiscriminantForm, x):
        return f.q(x) if use_q else f.b(x, x)

    # Necessary precheck: the multiset of values over the whole group.
    if sorted(value(f1, x) for x in f1.elements()) != sorted(
        value(f2, x) for x in f2.elements()
    ):
        return False

    m = len(f1.invariant_factors)
    gens1 = [
        tuple(int(i == j) for j in range(m)) for i in range(m)
    ]
    candidates = []
    for i, g in enumerate(gens1):
        d = f1.invariant_factors[i]
        cands = [
            h
            for h in f2.elements()
            if f2.element_order(h) == d and value(f2, h) == value(f1, g)
        ]
        if not cands:
            return False
        candidates.append(cands)

    work = prod(len(c) for c in candidates) * f1.order
    if work > 10_000_000:
        raise CapacityError(f"isomorphism search space too large ({work})")

    all_elems = list(f1.elements())
    for images in itertools.product(*candidates):
        ok = all(
            f2.b(images[i], images[j]) == f1.b(gens1[i], gens1[j])
            for i in range(m)
            for j in range(i, m)
        )
        if use_q and ok:
            ok = all(f2.q(images[i]) == f1.q(gens1[i]) for i in range(m))
        if not ok:
            continue
        image = {
            tuple(
                sum(x[i] * images[i][t] for i in range(m)) % f2.invariant_factors[t]
                for t in range(m)
            )
            for x in all_elems
        }
        if len(image) == f1.order:
            return True
    return False


# ---------------------------------------------------------------------------
# genus


@dataclass(frozen=True)
class GenusFingerprint:
    rank: int
    signature: tuple[int, int]
    even: bool
    invariant_factors: tuple[int, ...]
    value_table: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        s, t = self.signature
        assert s + t <= self.rank


def genus_fingerprint(L: GramLattice) -> GenusFingerprint:
    if not L.nondegenerate():
        raise InvalidInput("genus fingerprint needs a nondegenerate lattice")
    f = discriminant_form(L)
    values = sorted(f.q(x) if L.even else f.b(x, x) for x in f.elements())
    return GenusFingerprint(
        rank=L.rank,
        signature=signature(L),
        even=L.even,
        invariant_factors=f.invariant_factors,
        value_table=tuple(values),
    )


@dataclass(frozen=True)
class GenusComparison:
    equal: bool
    reason: str
    fingerprint_a: GenusFingerprint
    fingerprint_b: GenusFingerprint
    isometry_note: str


def genus_equal(L1: GramLattice, L2: GramLattice) -> GenusComparison:
    """Equality of genus fingerprints plus honest discriminant-form
    isomorphism, with a note on when genus equality certifies isometry."""
    fa, fb = genus_fingerprint(L1), genus_fingerprint(L2)
    reason = ""
    if fa.rank != fb.rank:
        reason = f"rank {fa.rank} != {fb.rank}"
    elif fa.signature != fb.signature:
        reason = f"signature {fa.signature} != {fb.signature}"
    elif fa.even != fb.even:
        reason = f"parity {'even' if fa.even else 'odd'} != {'even' if fb.even else 'odd'}"
    elif fa.invariant_factors != fb.invariant_factors:
        reason = f"invariant factors {fa.invariant_factors} != {fb.invariant_factors}"
    elif not disc_form_isomorphic(discriminant_form(L1), discriminant_form(L2)):
        reason = "discriminant forms not isomorphic"
    equal = not reason

    s, t = fa.signature
    indefinite = s > 0 and t > 0
    ngens = len(fa.invariant_factors)
    if equal and indefinite and fa.even and ngens <= fa.rank - 2:
        note = (
            "class number 1: indefinite even lattice with discriminant group "
            f"on {ngens} <= rank-2 = {fa.rank - 2} generators; genus equality "
            "certifies isometry"
        )
    elif equal and indefinite and not fa.even and not fa.invariant_factors:
        note = (
            "indefinite odd unimodular: unique in its genus (diagonal form); "
            "genus equality certifies isometry"
        )
    elif equal:
        note = "genera agree; isometry not certified by a uniqueness criterion"
    else:
        note = "genera differ"
    return GenusComparison(equal, reason, fa, fb, note)


# ---------------------------------------------------------------------------
# Picard / transcendental verification


class TranscendentalCheck(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class TranscendentalReport:
    checks: tuple[TranscendentalCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_transcendental(S: GramLattice, T: GramLattice) -> TranscendentalReport:
    """Checklist that T qualifies as the orthogonal complement of the Picard
    lattice S inside the rank-22, signature-(3,19) cohomology lattice:
    complementary rank and signature, T even, matching discriminant groups,
    and b_T = -b_S (q_T = -q_S when S is even)."""
    checks: list[TranscendentalCheck] = []

    rs, rt = S.rank, T.rank
    checks.append(
        TranscendentalCheck(
            "rank sum", rs + rt == 22, f"rank(S)+rank(T) = {rs}+{rt} = {rs + rt}, need 22"
        )
    )
    ss, st = signature(S), signature(T)
    sig_sum = (ss[0] + st[0], ss[1] + st[1])
    checks.append(
        TranscendentalCheck(
            "signature sum",
            sig_sum == (3, 19),
            f"{ss} + {st} = {sig_sum}, need (3, 19)",
        )
    )
    checks.append(
        TranscendentalCheck("T even", T.even, f"T diagonal parity: {'even' if T.even else 'odd'}")
    )

    if S.nondegenerate() and T.nondegenerate():
        fs, ft = discriminant_form(S), discriminant_form(T)
        checks.append(
            TranscendentalCheck(
                "invariant factors agree",
                fs.invariant_factors == ft.invariant_factors,
                f"A(S) = {fs.invariant_factors or '(trivial)'}, "
                f"A(T) = {ft.invariant_factors or '(trivial)'}",
            )
        )
        neg = fs.negated()
        # The bilinear discriminant form is defined for any lattice.
        neg_b = DiscriminantForm(neg.invariant_factors, False, None, neg.b_matrix)
        ft_b = DiscriminantForm(ft.invariant_factors, False, None, ft.b_matrix)
        checks.append(
            TranscendentalCheck(
                "b_T = -b_S",
                disc_form_isomorphic(neg_b, ft_b),
                "bilinear discriminant forms compared",
            )
        )
        if S.even and T.even:
            checks.append(
                TranscendentalCheck(
                    "q_T = -q_S",
                    disc_form_isomorphic(neg, ft),
                    "quadratic discriminant forms compared",
                )
            )
    else:
        checks.append(
            TranscendentalCheck("invariant factors agree", False, "degenerate input lattice")
        )
    return TranscendentalReport(tuple(checks))


# ---------------------------------------------------------------------------
# Dynkin-graph lattice of the triangle singularities


def dynkin_graph_lattice(p: int, q: int, r: int) -> GramLattice:
    """Gram matrix of the T1_{p,q,r} vanishing-lattice graph: three arms of
    lengths p-1, q-1, r-1 joined at a core {r, r1, r2}; every vertex has
    self-product -2; the core carries a double bond r--r2 of product -2 and
    r2 connects to r1 and to the first vertex of each arm, as does r."""
    if min(p, q, r) < 2:
        raise InvalidInput("T1_{p,q,r} needs p, q, r >= 2")
    n = p + q + r
    # vertex layout: 0 = r, 1 = r1, 2 = r2, then arms u (p-1), s (q-1), t (r-1)
    arm_u = list(range(3, 3 + (p - 1)))
    arm_s = list(range(3 + (p - 1), 3 + (p - 1) + (q - 1)))
    arm_t = list(range(3 + (p - 1) + (q - 1), n))
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = -2

    def bond(i, j, v=1):
        gram[i][j] = gram[j][i] = v

    for arm in (arm_u, arm_s, arm_t):
        for a, b in zip(arm, arm[1:]):
            bond(a, b)
        bond(0, arm[0])  # r -- first arm vertex
        bond(2, arm[0])  # r2 -- first arm vertex
    bond(2, 1)  # r2 -- r1
    bond(0, 2, -2)  # double-dashed r -- r2
    return GramLattice(tuple(tuple(row) for row in gram))


# ---------------------------------------------------------------------------
# Kodaira fibers


@dataclass(frozen=True)
class FiberType:
    """Kodaira fiber: symbol in {I, II, III, IV, I*, II*, III*, IV*}, with
    parameter b for I_b / I*_b and multiplicity m (multiple fibers exist only
    over I_b, b >= 0)."""

    symbol: str
    b: int | None = None
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.symbol not in {"I", "II", "III", "IV", "I*", "II*", "III*", "IV*"}:
            raise InvalidInput(f"unknown Kodaira symbol {self.symbol!r}")
        if self.symbol == "I":
            if self.b is None or self.b < 0:
                raise InvalidInput("I_b needs b >= 0")
        elif self.symbol == "I*":
            if self.b is None or self.b < 0:
                raise InvalidInput("I*_b needs b >= 0")
        elif self.b is not None:
            raise InvalidInput(f"type {self.symbol} carries no parameter")
        if self.multiplicity < 1:
            raise InvalidInput("multiplicity must be >= 1")
        if self.multiplicity > 1 and self.symbol != "I":
            raise InvalidInput("only I_b fibers (including smooth I_0) can be multiple")

    def __str__(self) -> str:
        base = f"{self.symbol}{self.b}" if self.b is not None else self.symbol
        return f"{self.multiplicity}x{base}" if self.multiplicity > 1 else base


def kodaira_fiber(t: FiberType) -> tuple[int, GramLattice | None]:
    """(Euler number, lattice contribution after omitting one multiplicity-1
    component).  Multiplicity does not change either value."""
    neg = lambda L: scale(L, -1)
    if t.symbol == "I":
        if t.b == 0:
            return 0, None
        if t.b == 1:
            return 1, None
        return t.b, neg(root("A", t.b - 1))
    if t.symbol == "II":
        return 2, None
    if t.symbol == "III":
        return 3, neg(root("A", 1))
    if t.symbol == "IV":
        return 4, neg(root("A", 2))
    if t.symbol == "I*":
        return t.b + 6, neg(root("D", 4 + t.b))
    if t.symbol == "II*":
        return 10, neg(root("E", 8))
    if t.symbol == "III*":
        return 9, neg(root("E", 7))
    assert t.symbol == "IV*"
    return 8, neg(root("E", 6))


class FiberEuler(NamedTuple):
    total: int
    on_k3_target: bool


def fiber_config_euler(config: list[FiberType]) -> FiberEuler:
    """Sum of fiber Euler numbers, checked against the rational-elliptic /
    K3-style target 24 used by all four families."""
    total = sum(kodaira_fiber(t)[0] for t in config)
    return FiberEuler(total, total == 24)


def kodaira_dimension(
    chi: int, genus: int, multiplicities: list[int]
) -> tuple[Fraction, object]:
    """(delta, kappa) for a relatively minimal genus-1 fibration over a curve
    of the given genus with the given multiple-fiber multiplicities:
    delta = (chi + 2*genus - 2) + sum (1 - 1/m_i); kappa = -inf / 0 / 1 by the
    sign of delta."""
    if chi < 0 or genus < 0:
        raise InvalidInput("chi and genus must be non-negative")
    if any(m < 2 for m in multiplicities):
        raise InvalidInput("multiple-fiber multiplicities are >= 2")
    delta = Fraction(chi + 2 * genus - 2) + sum(
        (1 - Fraction(1, m) for m in multiplicities), Fraction(0)
    )
    if delta > 0:
        kappa: object = 1
    elif delta == 0:
        kappa = 0
    else:
        kappa = float("-inf")
    return delta, kappa


def picard_from_configuration(case: str) -> GramLattice:
    """Picard lattice of the minimal model of the generic member, from the
    fiber/section configuration: (a) half-fiber and a -3 bisection;
    (b) those plus a -2 chain curve; (c) U + A_2(-1); (d) U."""
    table = {
        "a": from_gram([[0, 1], [1, -3]]),
        "b": from_gram([[0, 1, 0], [1, -3, 1], [0, 1, -2]]),
        "c": direct_sum(hyperbolic_U(), scale(root("A", 2), -1)),
        "d": hyperbolic_U(),
    }
    if case not in table:
        raise InvalidInput(f"case must be one of a, b, c, d; got {case!r}")
    return table[case]
