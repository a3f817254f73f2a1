"""Normal forms of the four amplitude-one families and torus equivalence.

Each family admits a normal form: a fixed set of allowed monomials, one or two
coefficients pinned to exact unit values, and non-vanishing constraints.  The
reduction pipelines bring a quasi-smooth member to that shape through exact
substitutions (square completion in the half-degree variable, affine changes
of the weight-2 variable, and shift loops in the middle variables), recording
the composed transformation and an overall scalar so the result reproduces the
input exactly.

Two scalar backends are supported.  The exact backend works over the
rationals and refuses k-th roots that do not exist there; the floating
backend works at a configurable mpmath precision and reports the residual of
the reduction.  Polynomials stay :class:`~wpsurf.poly.WPolynomial` on the
exact path; the floating path mirrors them with :class:`FloatPolynomial`.

Scale convention: normal forms describe hypersurfaces, not polynomials, so
reductions and equivalences may multiply the whole polynomial by a non-zero
scalar; every such scalar is recorded (``NormalFormTransform.scale``,
``TorusElement.scale``).  In particular the x3^2-coefficient is normalized to
-1 by a recorded global scalar rather than by an x3-rescaling, which keeps
the exact backend root-free on that step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import mpmath
import sympy

from .errors import (
    CapacityError,
    InvalidInput,
    NotReducible,
    RootRequired,
    WpsurfError,
)
from .poly import (
    Exponent,
    FamilySymbol,
    WPolynomial,
    WeightVector,
    monomial_sort_key,
    substitute,
    symbol,
    variable,
)

__all__ = [
    "NormalFormTemplate",
    "NormalFormCheck",
    "NormalFormTransform",
    "TorusElement",
    "ScalarField",
    "ExactField",
    "FloatField",
    "FloatPolynomial",
    "scalar_field",
    "normal_form_template",
    "case_symbol",
    "is_normal_form",
    "reduce_to_normal_form",
    "torus_equivalent",
    "normal_form_moduli_dim",
    "random_normal_form",
    "random_torus_element",
    "EXACT",
]


# ---------------------------------------------------------------------------
# scalar backends


class ScalarField:
    """Arithmetic backend: conversion, zero tests, and root extraction."""

    exact: bool
    name: str

    def convert(self, value):
        raise NotImplementedError

    def is_zero(self, value, scale=1) -> bool:
        raise NotImplementedError

    def root(self, value, k: int):
        """A k-th root of value; exact backend raises RootRequired when none
        exists among the rationals."""
        raise NotImplementedError

    def polynomial_root(self, coeffs: Sequence):
        """One root of sum(coeffs[i] * x**i); deterministic choice."""
        raise NotImplementedError


class ExactField(ScalarField):
    exact = True
    name = "exact"

    def convert(self, value):
        return Fraction(value)

    def is_zero(self, value, scale=1) -> bool:
        return value == 0

    def root(self, value, k: int):
        value = Fraction(value)
        if k < 1:
            raise InvalidInput("root order must be positive")
        if k == 1 or value in (0, 1):
            return value
        negative = value < 0
        if negative and k % 2 == 0:
            raise RootRequired(
                f"no rational {k}-th root of the negative value {value}", value
            )
        mag = -value if negative else value
        num, num_ok = sympy.integer_nthroot(mag.numerator, k)
        den, den_ok = sympy.integer_nthroot(mag.denominator, k)
        if not (num_ok and den_ok):
            raise RootRequired(f"{value} has no rational {k}-th root", value)
        r = Fraction(int(num), int(den))
        return -r if negative else r

    def polynomial_root(self, coeffs: Sequence):
        """Rational root of smallest magnitude of an exact polynomial, found
        by factoring over the rationals (linear factors give all of them)."""
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            return Fraction(0)  # zero polynomial: everything is a root
        if len(cs) == 1:
            raise RootRequired("non-zero constant polynomial has no root", cs[0])
        if cs[0] == 0:
            return Fraction(0)
        t = sympy.Symbol("t")
        poly = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(cs)],
            t,
            domain="QQ",
        )
        found: list[Fraction] = []
        _, factors = poly.factor_list()
        for factor, _mult in factors:
            if factor.degree() == 1:
                lead, const = (sympy.Rational(c) for c in factor.all_coeffs())
                r = -const / lead
                found.append(Fraction(int(r.p), int(r.q)))
        if not found:
            raise RootRequired(
                "polynomial has no rational root; rerun with the floating backend",
                cs[0],
            )
        return min(found, key=lambda r: (abs(r), r))


class FloatField(ScalarField):
    exact = False
    name = "float"

    def __init__(self, precision: int = 50):
        if precision < 10:
            raise InvalidInput("floating precision below 10 digits is unusable")
        self.precision = precision

    @property
    def tolerance(self):
        # Budget a third of the working digits for rounding accumulated by
        # interpolation, root extraction and the shift substitutions.
        with mpmath.workdps(self.precision):
            return mpmath.mpf(10) ** -((2 * self.precision) // 3)

    def convert(self, value):
        with mpmath.workdps(self.precision):
            if isinstance(value, Fraction):
                return mpmath.mpf(value.numerator) / value.denominator
            return mpmath.mpmathify(value)

    def is_zero(self, value, scale=1) -> bool:
        with mpmath.workdps(self.precision):
            return abs(value) <= self.tolerance * max(1, abs(scale))

    def root(self, value, k: int):
        if k < 1:
            raise InvalidInput("root order must be positive")
        with mpmath.workdps(self.precision):
            v = self.convert(value)
            if v == 0:
                return v
            # principal root through the complex plane keeps negatives legal
            return mpmath.power(mpmath.mpc(v), mpmath.mpf(1) / k)

    def polynomial_root(self, coeffs: Sequence):
        with mpmath.workdps(self.precision):
            cs = [self.convert(c) for c in coeffs]
            while cs and abs(cs[-1]) == 0:
                cs.pop()
            if not cs:
                return mpmath.mpf(0)
            if len(cs) == 1:
                raise RootRequired("non-zero constant polynomial has no root", cs[0])
            try:
                roots = mpmath.polyroots(
                    list(reversed(cs)), maxsteps=200, extraprec=3 * self.precision
                )
            except mpmath.libmp.NoConvergence as exc:  # pragma: no cover
                raise CapacityError(f"root finding did not converge: {exc}") from None
            roots = sorted(roots, key=lambda r: (mpmath.re(r), mpmath.im(r)))
            return roots[0]


EXACT = ExactField()


def scalar_field(name: str, precision: int = 50) -> ScalarField:
    if name == "exact":
        return EXACT
    if name == "float":
        return FloatField(precision)
    raise InvalidInput(f"unknown scalar backend {name!r} (use exact or float)")


# ---------------------------------------------------------------------------
# floating polynomials (mirror of WPolynomial without rational coercion)


class FloatPolynomial:
    """Sparse polynomial with mpmath coefficients over a weight vector."""

    __slots__ = ("weights", "_terms")

    def __init__(self, wts: WeightVector, terms: Mapping[Exponent, object]):
        object.__setattr__(self, "weights", wts)
        object.__setattr__(
            self, "_terms", {tuple(e): v for e, v in dict(terms).items() if v != 0}
        )

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exp: Exponent):
        return self._terms.get(tuple(exp), mpmath.mpf(0))

    def support(self) -> set:
        return set(self._terms)

    def is_homogeneous(self) -> bool:
        return len({self.weights.degree_of(e) for e in self._terms}) <= 1

    def degree(self) -> int:
        degs = {self.weights.degree_of(e) for e in self._terms}
        if not degs:
            raise InvalidInput("degree of the zero polynomial is undefined")
        if len(degs) > 1:
            raise InvalidInput(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __setattr__(self, *_):
        raise AttributeError("FloatPolynomial is immutable")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(
            self._terms.items(),
            key=lambda kv: (-self.weights.degree_of(kv[0]),) + monomial_sort_key(kv[0]),
        )
        pieces = []
        for exp, c in items:
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            cs = mpmath.nstr(c, 12)
            pieces.append(f"({cs})*{mono}" if mono else f"({cs})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"FloatPolynomial({list(self.weights)}, {len(self._terms)} terms)"


# ---------------------------------------------------------------------------
# templates


@dataclass(frozen=True)
class NormalFormTemplate:
    """Allowed support of a family's normal form with pinned units and
    non-vanishing constraints."""

    case: str
    symbol: FamilySymbol
    pinned: tuple[tuple[Exponent, int], ...]
    free: tuple[Exponent, ...]
    nonzero: tuple[Exponent, ...]
    torus_dim: int

    def __post_init__(self) -> None:
        d = self.symbol.degree
        wts = self.symbol.weights
        for exp, _ in self.pinned:
            assert wts.degree_of(exp) == d, f"pinned {exp} has wrong degree"
        for exp in self.free:
            assert wts.degree_of(exp) == d, f"free {exp} has wrong degree"
        assert set(self.nonzero) <= set(self.free)
        assert not (set(self.free) & {e for e, _ in self.pinned})

    @property
    def allowed(self) -> set[Exponent]:
        return {e for e, _ in self.pinned} | set(self.free)

    @property
    def moduli_dim(self) -> int:
        return len(self.free) - self.torus_dim


def _template_a() -> NormalFormTemplate:
    free = (
        [(5, 0, 3, 0)]
        + [(8 - 2 * m, m, 2, 0) for m in range(5)]
        + [(11 - 2 * m, m, 1, 0) for m in range(6)]
        + [(14 - 2 * m, m, 0, 0) for m in range(8)]
    )
    return NormalFormTemplate(
        case="a",
        symbol=symbol(14, [1, 2, 3, 7]),
        pinned=(((0, 1, 4, 0), 1), ((0, 0, 0, 2), -1)),
        free=tuple(free),
        nonzero=(),
        torus_dim=2,
    )


def _template_b() -> NormalFormTemplate:
    free = (
        [(7, 0, 0, 1), (4, 0, 1, 1), (1, 0, 2, 1)]
        + [(0, 0, 4, 0)]
        + [(6 - 2 * m, m, 2, 0) for m in range(4)]
        + [(9 - 2 * m, m, 1, 0) for m in range(5)]
        + [(12 - 2 * m, m, 0, 0) for m in range(7)]
    )
    return NormalFormTemplate(
        case="b",
        symbol=symbol(12, [1, 2, 3, 5]),
        pinned=(((0, 1, 0, 2), 1),),
        free=tuple(free),
        nonzero=((0, 0, 4, 0),),
        torus_dim=3,
    )


def _template_c() -> NormalFormTemplate:
    free = (
        [(9, 0, 0, 1), (4, 0, 1, 1)]
        + [(1, 0, 3, 0), (0, 3, 2, 0)]
        + [(11 - 2 * m, m, 1, 0) for m in range(6)]
        + [(16 - 2 * m, m, 0, 0) for m in range(9)]
    )
    return NormalFormTemplate(
        case="c",
        symbol=symbol(16, [1, 2, 5, 7]),
        pinned=(((0, 1, 0, 2), 1),),
        free=tuple(free),
        nonzero=((1, 0, 3, 0),),
        torus_dim=3,
    )


def _template_d() -> NormalFormTemplate:
    free = (
        [(0, 4, 2, 0)]
        + [(15 - 2 * m, m, 1, 0) for m in range(8)]
        + [(22 - 2 * m, m, 0, 0) for m in range(1, 12)]  # x0^22 stays excluded
    )
    return NormalFormTemplate(
        case="d",
        symbol=symbol(22, [1, 2, 7, 11]),
        pinned=(((1, 0, 3, 0), 1), ((0, 0, 0, 2), -1)),
        free=tuple(free),
        nonzero=((0, 4, 2, 0),),
        torus_dim=2,
    )


_TEMPLATES: dict[str, NormalFormTemplate] = {
    "a": _template_a(),
    "b": _template_b(),
    "c": _template_c(),
    "d": _template_d(),
}


def normal_form_template(case: str) -> NormalFormTemplate:
    if case not in _TEMPLATES:
        raise InvalidInput(f"case must be one of a, b, c, d; got {case!r}")
    return _TEMPLATES[case]


def case_symbol(case: str) -> FamilySymbol:
    return normal_form_template(case).symbol


def normal_form_moduli_dim(case: str) -> int:
    """Projective moduli of the family: free template coefficients minus the
    dimension of the residual torus (2 for a/d, 3 for b/c)."""
    return normal_form_template(case).moduli_dim


# ---------------------------------------------------------------------------
# membership check


@dataclass(frozen=True)
class NormalFormCheck:
    case: str
    ok: bool
    violations: tuple[str, ...]


def _mono_str(exp: Exponent) -> str:
    parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e]
    return "*".join(parts) if parts else "1"


def is_normal_form(F, case: str) -> NormalFormCheck:
    """Template membership: support allowed, pins exact, non-vanishing
    constraints met.  Wrong weights, degree, zero, or inhomogeneous input is
    an error, not a violation."""
    tmpl = normal_form_template(case)
    if tuple(F.weights) != tuple(tmpl.symbol.weights):
        raise InvalidInput(
            f"weights {tuple(F.weights)} do not match case ({case}) weights "
            f"{tuple(tmpl.symbol.weights)}"
        )
    if not F.support():
        raise InvalidInput("the zero polynomial is not a hypersurface")
    if not F.is_homogeneous() or F.degree() != tmpl.symbol.degree:
        raise InvalidInput(
            f"polynomial must be homogeneous of degree {tmpl.symbol.degree}"
        )
    violations: list[str] = []
    allowed = tmpl.allowed
    for exp in sorted(F.support(), key=monomial_sort_key):
        if exp not in allowed:
            violations.append(f"disallowed monomial {_mono_str(exp)}")
    for exp, pin in tmpl.pinned:
        have = F.coefficient(exp)
        if have != pin:
            violations.append(
                f"coefficient of {_mono_str(exp)} is {have}, must be exactly {pin}"
            )
    for exp in tmpl.nonzero:
        if F.coefficient(exp) == 0:
            violations.append(f"coefficient of {_mono_str(exp)} must be non-zero")
    return NormalFormCheck(case, not violations, tuple(violations))


# ---------------------------------------------------------------------------
# generic term-dict pipeline helpers (backend-agnostic scalars)

Terms = dict


def _t_scale(t: Terms, c) -> Terms:
    if c == 0:
        return {}
    return {e: v * c for e, v in t.items()}


def _t_add_into(acc: Terms, t: Terms, c=1) -> None:
    for e, v in t.items():
        s = acc.get(e, 0) + v * c
        if s == 0:
            acc.pop(e, None)
        else:
            acc[e] = s


def _t_mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + v1 * v2
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _t_pow(t: Terms, k: int, cache: list) -> Terms:
    while len(cache) <= k:
        cache.append(_t_mul(cache[-1], t))
    return cache[k]


def _t_affine(t: Terms, var: int, lin, shift: Terms, nvars: int) -> Terms:
    """Substitute x_var -> lin * x_var + shift (shift exponents must have a
    zero slot at ``var``)."""
    shift = {e: v for e, v in shift.items() if v != 0}
    if not shift and lin == 1:
        return dict(t)
    one = {(0,) * nvars: 1}
    shift_pows = [one]
    out: Terms = {}
    lin_pows: dict[int, object] = {0: 1}

    def lin_pow(j: int):
        if j not in lin_pows:
            lin_pows[j] = lin_pows[j - 1] * lin
        return lin_pows[j]

    for e, v in t.items():
        k = e[var]
        base = list(e)
        base[var] = 0
        if k == 0:
            _t_add_into(out, {tuple(base): v})
            continue
        for j in range(k + 1):
            piece = _t_pow(shift, k - j, shift_pows)
            c = v * comb(k, j) * lin_pow(j)
            for se, sv in piece.items():
                ne = list(base)
                ne[var] = j
                for i, s in enumerate(se):
                    ne[i] += s
                _t_add_into(out, {tuple(ne): sv * c})
    return out


def _t_substitute(t: Terms, images: list[Terms], nvars: int) -> Terms:
    one = {(0,) * nvars: 1}
    caches = [[one, dict(img)] for img in images]
    out: Terms = {}
    for e, v in t.items():
        term = {(0,) * nvars: v}
        for i, k in enumerate(e):
            if k:
                term = _t_mul(term, _t_pow(images[i], k, caches[i]))
        _t_add_into(out, term)
    return out


def _identity_images(nvars: int) -> list[Terms]:
    out = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        out.append({tuple(e): 1})
    return out


def _slice_coeff(t: Terms, var: int, k: int) -> Terms:
    """Terms with exponent k in ``var``, with that exponent removed."""
    out: Terms = {}
    for e, v in t.items():
        if e[var] == k:
            ne = list(e)
            ne[var] = 0
            out[tuple(ne)] = v
    return out


def _unit_exp(nvars: int, var: int, k: int = 1) -> Exponent:
    e = [0] * nvars
    e[var] = k
    return tuple(e)


# ---------------------------------------------------------------------------
# transforms


@dataclass(frozen=True)
class NormalFormTransform:
    """Composed coordinate change plus a recorded global scalar:
    applying ``x_i -> assignments[i]`` to the input and multiplying by
    ``scale`` reproduces the reduced polynomial (exactly on the exact
    backend; within ``residual`` on the floating backend)."""

    case: str
    assignments: tuple
    scale: object
    backend: str
    residual: object

    def apply(self, F):
        if self.backend == "exact":
            image = substitute(F, {i: g for i, g in enumerate(self.assignments)})
            return image * self.scale
        wts = F.weights
        n = len(wts)
        terms = {e: v for e, v in F.terms.items()}
        images = [dict(g.terms) for g in self.assignments]
        out = _t_substitute(terms, images, n)
        return FloatPolynomial(wts, _t_scale(out, self.scale))

    @property
    def is_identity(self) -> bool:
        if self.scale != 1:
            return False
        for i, g in enumerate(self.assignments):
            ident = {(_unit_exp(len(g.weights), i)): 1}
            gt = g.terms
            if set(gt) != set(ident) or any(gt[e] != 1 for e in gt):
                return False
        return True

    def describe(self) -> list[str]:
        lines = [f"x{i} -> {g}" for i, g in enumerate(self.assignments)]
        if isinstance(self.scale, (Fraction, int)):
            s = str(self.scale)
        else:
            s = mpmath.nstr(self.scale, 12)
        lines.append(f"scale -> {s}")
        if self.backend == "float":
            lines.append(f"residual -> {mpmath.nstr(self.residual, 3)}")
        return lines


@dataclass(frozen=True)
class TorusElement:
    """Diagonal coordinate change x_j -> c_j x_j with an optional recorded
    global scalar; preserves the pinned template coefficients."""

    case: str
    c: tuple
    scale: object = 1

    def __post_init__(self) -> None:
        tmpl = normal_form_template(self.case)
        if len(self.c) != len(tmpl.symbol.weights):
            raise InvalidInput("torus element needs one scalar per coordinate")
        if any(v == 0 for v in self.c) or self.scale == 0:
            raise InvalidInput("torus scalars must be non-zero")
        for exp, _pin in tmpl.pinned:
            prod = self.scale
            for ci, ei in zip(self.c, exp):
                prod = prod * ci**ei
            if isinstance(prod, Fraction) or isinstance(prod, int):
                ok = prod == 1
            else:
                ok = abs(prod - 1) < 1e-20
            if not ok:
                raise InvalidInput(
                    f"torus element does not preserve the pinned monomial "
                    f"{_mono_str(exp)}: factor {prod}"
                )

    @classmethod
    def identity(cls, case: str) -> "TorusElement":
        n = len(normal_form_template(case).symbol.weights)
        return cls(case, (Fraction(1),) * n, Fraction(1))

    @property
    def is_identity(self) -> bool:
        return all(v == 1 for v in self.c) and self.scale == 1

    def apply(self, F: WPolynomial) -> WPolynomial:
        terms = {}
        for e, v in F.terms.items():
            factor = self.scale
            for ci, ei in zip(self.c, e):
                factor = factor * ci**ei
            terms[e] = v * factor
        return WPolynomial(F.weights, terms)

    def __str__(self) -> str:
        cs = ", ".join(str(v) for v in self.c)
        return f"({cs}; scale {self.scale})"


# ---------------------------------------------------------------------------
# reduction pipelines


def reduce_to_normal_form(F: WPolynomial, case: str, field: ScalarField = EXACT):
    """Reduce a family member to its normal form.

    Returns ``(F_nf, transform)``.  The pipeline completes the square in the
    half-degree variable (cases a/d), pins the leading mixed monomial by an
    affine x1-change (a/b/c) or an x0-rescaling (d), and removes off-template
    monomials by shift substitutions; case (d) determines the x1-shift from a
    root of the degree-12 elimination polynomial of the x0^22 coefficient.
    """
    tmpl = normal_form_template(case)
    wts = tmpl.symbol.weights
    d = tmpl.symbol.degree
    if tuple(F.weights) != tuple(wts):
        raise InvalidInput(f"weights {tuple(F.weights)} do not match case ({case})")
    if not F.support():
        raise InvalidInput("the zero polynomial is not a hypersurface")
    if not F.is_homogeneous() or F.degree() != d:
        raise InvalidInput(f"polynomial must be homogeneous of degree {d}")

    n = len(wts)
    half = _unit_exp(n, 1, d // 2)
    if F.coefficient(half) == 0:
        raise NotReducible(
            f"coefficient of {_mono_str(half)} is zero: the hypersurface passes "
            "through (0:1:0:0)"
        )
    if case == "d":
        g0_exp = (0, 4, 2, 0)
        if F.coefficient(g0_exp) == 0:
            raise NotReducible(
                f"coefficient of {_mono_str(g0_exp)} is zero: no reduction to the "
                "normal form exists"
            )

    check = is_normal_form(F, case)
    if check.ok:
        ident = tuple(variable(wts, i) for i in range(n))
        return F, NormalFormTransform(
            case, ident, Fraction(1), "exact", Fraction(0)
        )

    if field.exact:
        terms: Terms = {e: Fraction(v) for e, v in F.terms.items()}
        out_terms, images, scale, residual = _run_pipeline(terms, case, field, n)
        F_nf = WPolynomial(wts, out_terms)
        assignments = tuple(WPolynomial(wts, img) for img in images)
        transform = NormalFormTransform(case, assignments, scale, "exact", residual)
        replay = transform.apply(F)
        assert replay == F_nf, "transform does not reproduce the reduction"
        result_check = is_normal_form(F_nf, case)
        assert result_check.ok, f"pipeline left violations: {result_check.violations}"
        return F_nf, transform

    with mpmath.workdps(field.precision):
        terms = {e: field.convert(v) for e, v in F.terms.items()}
        out_terms, images, scale, residual = _run_pipeline(terms, case, field, n)
        out_terms, proj_res = _project_to_template(out_terms, tmpl, field)
        F_nf = FloatPolynomial(wts, out_terms)
        assignments = tuple(FloatPolynomial(wts, img) for img in images)
        replay_terms = _t_substitute(
            {e: field.convert(v) for e, v in F.terms.items()},
            [dict(img) for img in images],
            n,
        )
        replay_terms = _t_scale(replay_terms, scale)
        gap = mpmath.mpf(0)
        for e in set(replay_terms) | set(out_terms):
            gap = max(gap, abs(replay_terms.get(e, 0) - out_terms.get(e, 0)))
        residual = max(proj_res, gap)
        transform = NormalFormTransform(case, assignments, scale, "float", residual)
        result_check = is_normal_form(F_nf, case)
        if not result_check.ok:
            raise WpsurfError(
                "floating reduction failed to reach the normal form: "
                + "; ".join(result_check.violations)
            )
        return F_nf, transform


def _run_pipeline(terms: Terms, case: str, field: ScalarField, n: int):
    """Shared reduction engine on raw term dicts.  Returns
    (terms, images, scale, residual)."""
    images = _identity_images(n)
    scale = field.convert(1)
    one = field.convert(1)

    def apply_map(sigma: list[Terms]) -> None:
        nonlocal terms
        terms = _t_substitute(terms, sigma, n)
        for i in range(n):
            images[i] = _t_substitute(images[i], sigma, n)

    def shift_map(var: int, lin, shift: Terms) -> list[Terms]:
        sigma = _identity_images(n)
        img = {k: v for k, v in shift.items()}
        _t_add_into(img, {_unit_exp(n, var): lin})
        sigma[var] = img
        return sigma

    if case in ("a", "d"):
        # complete the square in x3, then normalize its coefficient to -1 by
        # a recorded global scalar
        alpha = terms.get(_unit_exp(n, 3, 2), 0)
        if alpha == 0:
            raise NotReducible("coefficient of x3^2 is zero")
        B = _slice_coeff(terms, 3, 1)
        if B:
            apply_map(shift_map(3, one, _t_scale(B, -1 / (2 * alpha))))
        mu = -1 / alpha
        terms = _t_scale(terms, mu)
        scale = scale * mu
        terms[_unit_exp(n, 3, 2)] = field.convert(-1)

    if case == "a":
        a = terms.get((0, 1, 4, 0), 0)
        b = terms.get((2, 0, 4, 0), 0)
        if a == 0:
            raise NotReducible("coefficient of x1*x2^4 is zero")
        # x1 -> (x1 - b*x0^2)/a pins the x2^4-coefficient to exactly x1
        apply_map(shift_map(1, 1 / a, {(2, 0, 0, 0): -b / a}))
        terms[(0, 1, 4, 0)] = field.convert(1)
        # one x2-shift removes the x1-divisible x2^3 monomials
        dirt = {
            e: v for e, v in terms.items() if e[2] == 3 and e[3] == 0 and e[1] > 0
        }
        if dirt:
            eps = {(e[0], e[1] - 1, 0, 0): -v / 4 for e, v in dirt.items()}
            apply_map(shift_map(2, one, eps))

    elif case == "d":
        c = terms.get((1, 0, 3, 0), 0)
        if c == 0:
            raise NotReducible("coefficient of x0*x2^3 is zero")
        # rescale x0 to pin x0*x2^3 at exactly 1 (rational; no cube root)
        sigma = _identity_images(n)
        sigma[0] = {_unit_exp(n, 0): 1 / c}
        apply_map(sigma)
        terms[(1, 0, 3, 0)] = field.convert(1)
        g0 = terms.get((0, 4, 2, 0), 0)
        if g0 == 0:
            raise NotReducible(
                "coefficient of x1^4*x2^2 vanished during the reduction"
            )
        beta = _case_d_shift_root(terms, field, n)
        if beta != 0:
            apply_map(shift_map(1, one, {(2, 0, 0, 0): beta}))
        eps = _case_d_x2_shift_terms(terms)
        if eps:
            apply_map(shift_map(2, one, eps))
        x22 = terms.get((22, 0, 0, 0), 0)
        working_scale = max((abs(v) for v in terms.values()), default=1)
        if not field.is_zero(x22, scale=working_scale):
            raise AssertionError(
                f"x0^22 coefficient {x22} survived the elimination shift"
            )
        terms.pop((22, 0, 0, 0), None)

    else:  # cases b, c
        a = terms.get((0, 1, 0, 2), 0)
        b = terms.get((2, 0, 0, 2), 0)
        if a == 0:
            raise NotReducible("coefficient of x1*x3^2 is zero")
        apply_map(shift_map(1, 1 / a, {(2, 0, 0, 0): -b / a}))
        terms[(0, 1, 0, 2)] = field.convert(1)
        if case == "b":
            lead = terms.get((0, 0, 4, 0), 0)
            if lead == 0:
                raise NotReducible("coefficient of x2^4 is zero")
        else:
            lead = terms.get((1, 0, 3, 0), 0)
            if lead == 0:
                raise NotReducible("coefficient of x0*x2^3 is zero")
        for _round in range(12):
            acted = False
            # x3-shift: remove x1-divisible x3-linear monomials
            dirt = {
                e: v for e, v in terms.items() if e[3] == 1 and e[1] > 0
            }
            if dirt:
                eta = {(e[0], e[1] - 1, e[2], 0): -v / 2 for e, v in dirt.items()}
                apply_map(shift_map(3, one, eta))
                acted = True
            if case == "b":
                # x2-shift: the template allows no x2^3 monomials at all
                dirt = {e: v for e, v in terms.items() if e[2] == 3 and e[3] == 0}
                if dirt:
                    zeta = {
                        (e[0], e[1], 0, 0): -v / (4 * lead) for e, v in dirt.items()
                    }
                    apply_map(shift_map(2, one, zeta))
                    acted = True
            else:
                # x2-shift: only x1^3*x2^2 may survive in the x2^2 class
                dirt = {
                    e: v
                    for e, v in terms.items()
                    if e[2] == 2 and e[3] == 0 and e != (0, 3, 2, 0)
                }
                if dirt:
                    assert all(e[0] > 0 for e in dirt), "x2^2 dirt not divisible by x0"
                    zeta = {
                        (e[0] - 1, e[1], 0, 0): -v / (3 * lead) for e, v in dirt.items()
                    }
                    apply_map(shift_map(2, one, zeta))
                    acted = True
            if not acted:
                break
        else:
            raise AssertionError("shift loop failed to terminate in 12 rounds")

    if field.exact:
        terms = {e: v for e, v in terms.items() if v != 0}
        residual = Fraction(0)
    else:
        residual = mpmath.mpf(0)
    return terms, images, scale, residual


def _case_d_x2_shift_terms(terms: Terms) -> Terms:
    """Shift of x2 that reduces the x2^2 class to its x1^4 monomial."""
    dirt = {
        e: v for e, v in terms.items() if e[2] == 2 and e[3] == 0 and e != (0, 4, 2, 0)
    }
    if not dirt:
        return {}
    assert all(e[0] > 0 for e in dirt), "x2^2 dirt not divisible by x0"
    lead = terms[(1, 0, 3, 0)]
    return {(e[0] - 1, e[1], 0, 0): -v / (3 * lead) for e, v in dirt.items()}


def _case_d_shift_root(terms: Terms, field: ScalarField, n: int):
    """Root of the elimination polynomial phi: the x0^22 coefficient after
    the x1-shift by beta*x0^2 followed by the normalizing x2-shift, as a
    polynomial in beta (degree exactly 12).  Determined by interpolation at
    integer nodes and verified at one extra node."""

    def sample(beta):
        shifted = _t_affine(terms, 1, 1, {(2, 0, 0, 0): beta}, n)
        eps = _case_d_x2_shift_terms(shifted)
        if eps:
            shifted = _t_affine(shifted, 2, 1, eps, n)
        return shifted.get((22, 0, 0, 0), 0)

    nodes = [field.convert(k) for k in range(14)]
    values = [sample(b) for b in nodes]
    coeffs = _interpolate(nodes[:13], values[:13], field)
    # degree bound self-check at the spare node
    acc = field.convert(0)
    for c in reversed(coeffs):
        acc = acc * nodes[13] + c
    if field.exact:
        assert acc == values[13], "elimination polynomial exceeded degree 12"
    else:
        scale = max((abs(v) for v in values), default=1)
        assert abs(acc - values[13]) <= field.tolerance * max(
            1, abs(scale)
        ), "elimination polynomial exceeded degree 12"
    if all(field.is_zero(c) for c in coeffs):
        return field.convert(0)
    try:
        return field.polynomial_root(coeffs)
    except RootRequired:
        raise RootRequired(
            "eliminating the x0^22 coefficient "
            f"({values[0]} after the normalizing shift) requires an irrational "
            "root; rerun with the floating backend",
            values[0],
        ) from None


def _interpolate(nodes, values, field: ScalarField):
    """Coefficients (ascending) of the unique polynomial through the points,
    via Newton divided differences."""
    k = len(nodes)
    table = list(values)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level])
    coeffs = [field.convert(0)] * k
    coeffs[0] = table[0] * 1
    basis = [field.convert(1)] + [field.convert(0)] * (k - 1)
    for level in range(1, k):
        # basis <- basis * (x - nodes[level-1])
        new = [field.convert(0)] * k
        for i in range(level):
            new[i + 1] += basis[i]
            new[i] -= basis[i] * nodes[level - 1]
        basis = new
        for i in range(level + 1):
            coeffs[i] += table[level] * basis[i]
    return coeffs


def _project_to_template(terms: Terms, tmpl: NormalFormTemplate, field: FloatField):
    """Snap a floating reduction onto the template: drop off-template
    coefficients and repin the unit coefficients, verifying every adjustment
    is within tolerance.  Returns (terms, residual)."""
    allowed = tmpl.allowed
    scale = max((abs(v) for v in terms.values()), default=mpmath.mpf(1))
    resid = mpmath.mpf(0)
    out: Terms = {}
    for e, v in terms.items():
        if e in allowed:
            out[e] = v
        else:
            if abs(v) > field.tolerance * max(1, scale):
                raise WpsurfError(
                    f"floating reduction left {_mono_str(e)} with coefficient "
                    f"{mpmath.nstr(v, 8)} beyond tolerance"
                )
            resid = max(resid, abs(v))
    for e, pin in tmpl.pinned:
        have = out.get(e, mpmath.mpf(0))
        gap = abs(have - pin)
        if gap > field.tolerance * max(1, scale):
            raise WpsurfError(
                f"floating reduction left the pinned monomial {_mono_str(e)} at "
                f"{mpmath.nstr(have, 8)}"
            )
        resid = max(resid, gap)
        out[e] = field.convert(pin)
    return out, resid


# ---------------------------------------------------------------------------
# torus equivalence


def torus_equivalent(
    F1, F2, case: str, field: ScalarField = EXACT
) -> TorusElement | None:
    """Diagonal equivalence of two normal forms.

    Solves the multiplicative system c^e(m) * s = coeff2(m)/coeff1(m) over the
    shared support by Smith reduction of the exponent matrix; tries the
    scale-free system first and falls back to the scalar-augmented one.
    Returns None when the supports differ or the system is inconsistent.
    """
    from .lattice import smith_normal_form

    for F in (F1, F2):
        chk = is_normal_form(F, case)
        if not chk.ok:
            raise InvalidInput(
                "torus equivalence needs normal forms; violations: "
                + "; ".join(chk.violations)
            )
    if F1.support() != F2.support():
        return None
    monos = sorted(F1.support(), key=monomial_sort_key)
    ratios = [
        field.convert(1) * F2.coefficient(e) / F1.coefficient(e) for e in monos
    ]
    nvars = len(tuple(F1.weights))

    def attempt(with_scale: bool):
        cols = nvars + (1 if with_scale else 0)
        rows = [list(e) + ([1] if with_scale else []) for e in monos]
        D, U, V = smith_normal_form(rows)
        m = len(rows)
        t = []
        for i in range(m):
            prod = field.convert(1)
            for j, u in enumerate(U[i]):
                if u:
                    prod = prod * ratios[j] ** u
            t.append(prod)
        ys = []
        for i in range(min(m, cols)):
            di = D[i][i]
            if di == 0:
                if not _scalar_is_one(t[i], field):
                    return "inconsistent", None
                ys.append(field.convert(1))
            else:
                ys.append(field.root(t[i], di))
        for i in range(cols, m):
            if not _scalar_is_one(t[i], field):
                return "inconsistent", None
        while len(ys) < cols:
            ys.append(field.convert(1))
        sol = []
        for j in range(cols):
            val = field.convert(1)
            for i in range(cols):
                vji = V[j][i]
                if vji:
                    val = val * ys[i] ** vji
            sol.append(val)
        # any per-component root choice must solve the full system
        for row, want in zip(rows, ratios):
            got = field.convert(1)
            for j, e in enumerate(row):
                if e:
                    got = got * sol[j] ** e
            if field.exact:
                assert got == want, "multiplicative solve lost exactness"
            else:
                assert abs(got - want) <= field.tolerance * max(1, abs(want))
        return "ok", sol

    try:
        status, sol = attempt(with_scale=False)
        if status == "ok":
            return TorusElement(case, tuple(sol), field.convert(1))
        root_error = None
    except RootRequired as exc:
        root_error = exc
    status, sol = attempt(with_scale=True)
    if status == "ok":
        return TorusElement(case, tuple(sol[:nvars]), sol[nvars])
    if root_error is not None:
        raise root_error
    return None


def _scalar_is_one(v, field: ScalarField) -> bool:
    if field.exact:
        return v == 1
    return abs(v - 1) <= field.tolerance


# ---------------------------------------------------------------------------
# randomized generators (tests, benchmarks, stabilizer spot checks)


def random_normal_form(case: str, rng, spread: int = 9) -> WPolynomial:
    """Random member of the normal-form family: every free coefficient is a
    non-zero rational with numerator/denominator up to ``spread``."""
    tmpl = normal_form_template(case)
    terms: dict[Exponent, Fraction] = {e: Fraction(v) for e, v in tmpl.pinned}
    for e in tmpl.free:
        num = rng.choice([i for i in range(-spread, spread + 1) if i])
        den = rng.randint(1, spread)
        terms[e] = Fraction(num, den)
    return WPolynomial(tmpl.symbol.weights, terms)


def random_torus_element(case: str, rng, spread: int = 7) -> TorusElement:
    """Random torus element satisfying the case constraint exactly."""

    def rand_scalar() -> Fraction:
        num = rng.choice([i for i in range(-spread, spread + 1) if i])
        den = rng.randint(1, spread)
        return Fraction(num, den)

    c0, c1, c2, c3 = (rand_scalar() for _ in range(4))
    if case == "a":
        c1 = 1 / c2**4
        c3 = Fraction(rng.choice([1, -1]))
    elif case == "d":
        c0 = 1 / c2**3
        c3 = Fraction(rng.choice([1, -1]))
    else:
        c1 = 1 / c3**2
    return TorusElement(case, (c0, c1, c2, c3), Fraction(1))
