"""Exact sparse polynomial arithmetic graded by positive integer weights.

A weighted projective space P(a_0,...,a_n) assigns weight ``a_i`` to the
coordinate ``x_i``; a monomial ``x^e`` then has weighted degree
``sum(e_i * a_i)``.  Everything in this module is exact: coefficients are
:class:`fractions.Fraction`, the zero polynomial is the empty term map, and
no stored coefficient is ever zero.

Monomial order
--------------
All enumeration and formatting uses graded lexicographic order with ``x0``
most significant, listed in *descending* order inside a fixed degree.  Basis
lists and matrices elsewhere in the package inherit this order, which makes
every reported table reproducible bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping

from .errors import InvalidInput, SubstitutionError

Exponent = tuple[int, ...]
Coeff = Fraction


@dataclass(frozen=True)
class WeightVector:
    """Ordered positive integer weights ``a_0..a_n``."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) == 0:
            raise InvalidInput("weight vector must be non-empty")
        if any((not isinstance(a, int)) or a < 1 for a in self.weights):
            raise InvalidInput(f"weights must be positive integers: {self.weights}")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    @property
    def total(self) -> int:
        """N = sum of the weights."""
        return sum(self.weights)

    def degree_of(self, exponents: Exponent) -> int:
        if len(exponents) != len(self.weights):
            raise InvalidInput(
                f"exponent tuple of length {len(exponents)} does not match "
                f"{len(self.weights)} weights"
            )
        return sum(e * a for e, a in zip(exponents, self.weights))

    def well_formed(self) -> bool:
        """True when every n-element sub-multiset of the n+1 weights has gcd 1.

        Equivalently: dropping any single weight leaves a coprime set, so no
        quasi-reflection acts on the ambient space.
        """
        n = len(self.weights)
        for skip in range(n):
            g = 0
            for i, a in enumerate(self.weights):
                if i != skip:
                    g = gcd(g, a)
            if g != 1:
                return False
        return True


def weights(*values: int) -> WeightVector:
    return WeightVector(tuple(values))


@dataclass(frozen=True)
class FamilySymbol:
    """The type symbol (d, [a_0..a_n]) of a family of weighted hypersurfaces."""

    degree: int
    weights: WeightVector

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidInput("degree must be positive")

    @property
    def amplitude(self) -> int:
        """d - N; for a quasi-smooth member, O(amplitude) is the canonical sheaf."""
        return self.degree - self.weights.total

    def __str__(self) -> str:
        return f"({self.degree},[{','.join(map(str, self.weights))}])"


def symbol(degree: int, wts: Iterable[int]) -> FamilySymbol:
    return FamilySymbol(degree, WeightVector(tuple(wts)))


def amplitude(sym: FamilySymbol) -> int:
    return sym.amplitude


def singular_strata(wts: WeightVector) -> list[tuple[tuple[int, ...], int]]:
    """All proper coordinate strata carrying quotient singularities.

    Returns pairs ``(index_subset, h)`` where ``h > 1`` is the gcd of the
    retained weights; subsets are scanned from single points upward and a
    subset is reported only when it is not swallowed by a larger stratum with
    the same order (for well-formed vectors of surface type the result is a
    list of isolated coordinate points).
    """
    n = len(wts)
    found: list[tuple[tuple[int, ...], int]] = []
    # Proper non-empty subsets, smallest first; a subset I is singular when
    # gcd(a_i : i in I) > 1.
    for size in range(1, n):
        for subset in _subsets(n, size):
            g = 0
            for i in subset:
                g = gcd(g, wts[i])
            if g > 1:
                found.append((subset, g))
    return found


def _subsets(n: int, size: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    return combinations(range(n), size)


class WPolynomial:
    """Sparse exact-rational polynomial over a fixed weight vector.

    ``terms`` maps exponent tuples to non-zero Fractions; the zero polynomial
    has an empty map.  Values are immutable after construction.
    """

    __slots__ = ("weights", "_terms", "_hash")

    def __init__(self, wts: WeightVector, terms: Mapping[Exponent, object] = ()):
        object.__setattr__(self, "weights", wts)
        clean: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(wts):
                raise InvalidInput(
                    f"exponent {exp} does not match {len(wts)} variables"
                )
            if any(e < 0 for e in exp):
                raise InvalidInput(f"negative exponent in {exp}")
            c = Fraction(c)
            if c != 0:
                c0 = clean.get(exp)
                c = c if c0 is None else c0 + c
                if c:
                    clean[exp] = c
                elif exp in clean:
                    del clean[exp]
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- mapping-ish access ------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def support(self) -> set[Exponent]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WPolynomial):
            return NotImplemented
        return self.weights == other.weights and self._terms == other._terms

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.weights, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- degree bookkeeping --------------------------------------------------

    def is_homogeneous(self) -> bool:
        degs = {self.weights.degree_of(e) for e in self._terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Common weighted degree; rejects zero and inhomogeneous polynomials."""
        degs = {self.weights.degree_of(e) for e in self._terms}
        if not degs:
            raise InvalidInput("degree of the zero polynomial is undefined")
        if len(degs) > 1:
            raise InvalidInput(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    # -- arithmetic ----------------------------------------------------------

    def _require_same_space(self, other: "WPolynomial") -> None:
        if self.weights != other.weights:
            raise InvalidInput("polynomials live over different weight vectors")

    def __add__(self, other: "WPolynomial") -> "WPolynomial":
        if not isinstance(other, WPolynomial):
            return NotImplemented
        self._require_same_space(other)
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            c0 = terms.get(exp)
            s = c if c0 is None else c0 + c
            if s:
                terms[exp] = s
            elif exp in terms:
                del terms[exp]
        return self._wrap(terms)

    def __sub__(self, other: "WPolynomial") -> "WPolynomial":
        if not isinstance(other, WPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "WPolynomial":
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, WPolynomial):
            self._require_same_space(other)
            out: dict[Exponent, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c0 = out.get(e)
                    s = c1 * c2 if c0 is None else c0 + c1 * c2
                    if s:
                        out[e] = s
                    elif e in out:
                        del out[e]
            return self._wrap(out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self._wrap({})
            return self._wrap({e: v * c for e, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "WPolynomial":
        if k < 0:
            raise InvalidInput("negative power of a polynomial")
        result = self._wrap({(0,) * len(self.weights): Fraction(1)})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _wrap(self, terms: dict[Exponent, Fraction]) -> "WPolynomial":
        p = WPolynomial.__new__(WPolynomial)
        object.__setattr__(p, "weights", self.weights)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, *_):
        raise AttributeError("WPolynomial is immutable")

    # -- presentation ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"WPolynomial({list(self.weights)}, {format_poly(self)!r})"


def zero(wts: WeightVector) -> WPolynomial:
    return WPolynomial(wts, {})


def constant(wts: WeightVector, c) -> WPolynomial:
    return WPolynomial(wts, {(0,) * len(wts): Fraction(c)})


def variable(wts: WeightVector, i: int) -> WPolynomial:
    e = [0] * len(wts)
    e[i] = 1
    return WPolynomial(wts, {tuple(e): Fraction(1)})


def monomial(wts: WeightVector, exp: Exponent, c=1) -> WPolynomial:
    return WPolynomial(wts, {tuple(exp): Fraction(c)})


def enumerate_monomials(wts: WeightVector, d: int) -> list[Exponent]:
    """Every exponent tuple of weighted degree exactly ``d``, in descending
    graded-lex order (x0 most significant).  Empty list when no solutions."""
    if d < 0:
        raise InvalidInput("degree must be non-negative")
    out: list[Exponent] = []
    n = len(wts)

    def rec(i: int, remaining: int, prefix: list[int]) -> None:
        if i == n - 1:
            q, r = divmod(remaining, wts[i])
            if r == 0:
                out.append(tuple(prefix + [q]))
            return
        for e in range(remaining // wts[i], -1, -1):
            rec(i + 1, remaining - e * wts[i], prefix + [e])

    rec(0, d, [])
    return out


def monomial_sort_key(exp: Exponent):
    """Sort key giving *descending* graded-lex order when used with
    ``sorted(..., key=monomial_sort_key)``; degree-graded with x0 dominant."""
    return tuple(-e for e in exp)


def partial_derivative(F: WPolynomial, i: int) -> WPolynomial:
    if not 0 <= i < len(F.weights):
        raise InvalidInput(f"variable index {i} out of range")
    terms: dict[Exponent, Fraction] = {}
    for exp, c in F.terms.items():
        if exp[i] == 0:
            continue
        e = list(exp)
        coeff = c * e[i]
        e[i] -= 1
        terms[tuple(e)] = coeff
    return WPolynomial(F.weights, terms)


def substitute(F: WPolynomial, assignments: Mapping[int, WPolynomial]) -> WPolynomial:
    """Simultaneously substitute ``x_i -> assignments[i]`` (identity elsewhere).

    Each assigned polynomial must be weighted-homogeneous of the weight of its
    variable, so the result stays homogeneous of the degree of ``F``.
    """
    wts = F.weights
    for i, G in assignments.items():
        if not 0 <= i < len(wts):
            raise SubstitutionError(f"variable index {i} out of range")
        if G.weights != wts:
            raise SubstitutionError("assignment lives over different weights")
        if G:
            if not G.is_homogeneous() or G.degree() != wts[i]:
                raise SubstitutionError(
                    f"assignment for x{i} must be homogeneous of degree {wts[i]}"
                )

    images = [
        assignments.get(i, variable(wts, i)) for i in range(len(wts))
    ]
    # Cache powers per variable: exponents repeat heavily across terms.
    power_cache: list[dict[int, WPolynomial]] = [
        {0: constant(wts, 1), 1: images[i]} for i in range(len(wts))
    ]

    def power(i: int, k: int) -> WPolynomial:
        cache = power_cache[i]
        if k not in cache:
            j = max(e for e in cache if e <= k)
            acc = cache[j]
            while j < k:
                acc = acc * images[i]
                j += 1
                cache[j] = acc
        return cache[k]

    result = zero(wts)
    for exp, c in F.terms.items():
        term = constant(wts, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


# ---------------------------------------------------------------------------
# Text grammar
#
#   poly   := term (('+'|'-') term)*
#   term   := [coeff '*']? monomial | coeff
#   coeff  := integer ['/' integer]
#   monomial := factor ('*' factor)*
#   factor := 'x' index ['^' exponent]
#
# Whitespace is insignificant.  Example: "x0^14 + x1^7 + x1*x2^4 + x3^2".
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>x(\d+))(?:\^(?P<pow>\d+))?|(?P<int>\d+)|(?P<op>[+\-*/]))")


def parse_poly(text: str, wts: WeightVector) -> WPolynomial:
    """Parse the CLI polynomial grammar into a :class:`WPolynomial`."""
    tokens = _tokenize(text)
    if not tokens:
        raise InvalidInput("empty polynomial text")
    terms: dict[Exponent, Fraction] = {}
    pos = 0
    sign = 1
    # optional leading sign
    if tokens[pos][0] == "op" and tokens[pos][1] in "+-":
        sign = -1 if tokens[pos][1] == "-" else 1
        pos += 1
    while True:
        pos, exp, coeff = _parse_term(tokens, pos, wts)
        coeff *= sign
        prev = terms.get(exp, Fraction(0)) + coeff
        if prev:
            terms[exp] = prev
        elif exp in terms:
            del terms[exp]
        if pos == len(tokens):
            break
        kind, value = tokens[pos]
        if kind != "op" or value not in "+-":
            raise InvalidInput(f"expected '+' or '-' at token {pos} in {text!r}")
        sign = -1 if value == "-" else 1
        pos += 1
        if pos == len(tokens):
            raise InvalidInput(f"dangling operator at end of {text!r}")
    return WPolynomial(wts, terms)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise InvalidInput(f"cannot tokenize {text[pos:]!r}")
            break
        if m.group("var"):
            tokens.append(("var", (int(m.group(2)), int(m.group("pow") or 1))))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int"))))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_term(tokens, pos, wts: WeightVector):
    coeff = Fraction(1)
    exp = [0] * len(wts)
    saw_factor = False
    saw_coeff = False

    def take_number():
        nonlocal pos
        value = Fraction(tokens[pos][1])
        pos += 1
        if (
            pos + 1 < len(tokens)
            and tokens[pos] == ("op", "/")
            and tokens[pos + 1][0] == "int"
        ):
            den = tokens[pos + 1][1]
            if den == 0:
                raise InvalidInput("zero denominator in coefficient")
            value /= den
            pos += 2
        return value

    if pos < len(tokens) and tokens[pos][0] == "int":
        coeff = take_number()
        saw_coeff = True
        if pos < len(tokens) and tokens[pos] == ("op", "*"):
            pos += 1
        else:
            return pos, tuple(exp), coeff  # bare constant term
    while pos < len(tokens) and tokens[pos][0] == "var":
        index, power = tokens[pos][1]
        if not 0 <= index < len(wts):
            raise InvalidInput(f"variable x{index} out of range for {len(wts)} weights")
        exp[index] += power
        saw_factor = True
        pos += 1
        if pos < len(tokens) and tokens[pos] == ("op", "*"):
            if pos + 1 < len(tokens) and tokens[pos + 1][0] == "var":
                pos += 1
            else:
                raise InvalidInput("dangling '*' in term")
    if not saw_factor and not saw_coeff:
        raise InvalidInput(f"expected a term at token {pos}")
    return pos, tuple(exp), coeff


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(F: WPolynomial) -> str:
    """Deterministic text form: terms in descending graded-lex order within
    descending degree, '*' separated factors, no insignificant whitespace."""
    if not F:
        return "0"
    items = sorted(
        F.terms.items(),
        key=lambda kv: (-F.weights.degree_of(kv[0]),) + monomial_sort_key(kv[0]),
    )
    pieces: list[str] = []
    for exp, c in items:
        factors = [
            f"x{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exp)
            if e > 0
        ]
        mag = abs(c)
        if not factors:
            body = format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_coeff(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += sign + body
    return out
