"""Exact sparse multivariate polynomial arithmetic over the rationals.

Polynomials live in Q[z0, z1, ..., zs].  A polynomial is stored as a map
from monomials (exponent tuples, one entry per variable) to nonzero
Fraction coefficients, so equality testing is exact and canonical: two
polynomials are equal iff their term maps are equal.

The display order is graded lexicographic with z0 > z1 > ... > zs: terms
of higher total degree come first, and within one degree the exponent
tuples are compared left to right.  The canonical text format writes
coefficients as `num/den` (denominator omitted when 1), exponents with a
caret, and explicit `+`/`-` separators, e.g.

    z0^4 + 2*z0^3*z3 + z0^2*z3^2 - z0^2*z4^2

This string form is the golden-file contract used by the test suite and
the command line tool.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when operands live in polynomial rings of different sizes."""


class ShapeError(ValueError):
    """Raised for non-square or ragged matrix input."""


def _frac(value: int | str | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


class MultiPoly:
    """A sparse multivariate polynomial over Q, immutable by convention.

    Supports the ring operations through the usual operators (`+`, `-`,
    `*`, unary `-`, `**`).  Mixing polynomials from rings with different
    numbers of variables raises RingMismatchError; plain ints, strings
    and Fractions are coerced to constants.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Monomial, int | str | Fraction] | None = None):
        if num_vars < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != num_vars:
                    raise RingMismatchError(
                        f"monomial {mono} has {len(mono)} exponents, expected {num_vars}"
                    )
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in monomial {mono}")
                c = _frac(coeff)
                if c:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> MultiPoly:
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: int | str | Fraction) -> MultiPoly:
        return cls(num_vars, {(0,) * num_vars: _frac(value)})

    @classmethod
    def one(cls, num_vars: int) -> MultiPoly:
        return cls.constant(num_vars, 1)

    @classmethod
    def variable(cls, num_vars: int, index: int) -> MultiPoly:
        """The polynomial z_index."""
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = 1
        return cls(num_vars, {tuple(exps): 1})

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the empty monomial (0 if absent)."""
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def total_degree(self) -> int:
        """Max total degree over terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical graded-lex descending order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=_grlex_key, reverse=True)]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.num_vars, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, num_vars={self.num_vars})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise RingMismatchError(
                    f"operands have {self.num_vars} and {other.num_vars} variables"
                )
            return other
        return MultiPoly.constant(self.num_vars, other)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return _raw(self.num_vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m)
                if s is None:
                    out[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return _raw(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, point: Sequence[int | str | Fraction]) -> Fraction:
        """Evaluate at a rational point (one value per variable)."""
        if len(point) != self.num_vars:
            raise RingMismatchError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        vals = [_frac(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            prod = coeff
            for v, e in zip(vals, mono):
                if e:
                    prod *= v**e
            total += prod
        return total

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Graded-lex largest term; error on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    # -- canonical text ----------------------------------------------------

    def to_text(self) -> str:
        """Render in the canonical graded-lex text format."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            body = _term_text(mono, abs(coeff))
            if i == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, num_vars: int | None = None) -> MultiPoly:
        """Parse the canonical text format (whitespace-insensitive)."""
        return parse_poly(text, num_vars)


def _raw(num_vars: int, terms: dict[Monomial, Fraction]) -> MultiPoly:
    """Internal constructor that trusts its input (already canonical)."""
    poly = MultiPoly.__new__(MultiPoly)
    object.__setattr__(poly, "num_vars", num_vars)
    object.__setattr__(poly, "terms", terms)
    return poly


def _term_text(mono: Monomial, coeff: Fraction) -> str:
    factors = [f"z{i}^{e}" if e > 1 else f"z{i}" for i, e in enumerate(mono) if e]
    if not factors:
        return _frac_text(coeff)
    if coeff != 1:
        factors.insert(0, _frac_text(coeff))
    return "*".join(factors)


def _frac_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_TERM_SPLIT = re.compile(r"(?=[+-])")
_VAR_RE = re.compile(r"^z(\d+)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse the canonical polynomial text format.

    When `num_vars` is None it is inferred as max variable index + 1.
    """
    squeezed = text.replace(" ", "").replace("\t", "")
    if not squeezed:
        raise ValueError("empty polynomial text")
    raw_terms: list[tuple[Fraction, dict[int, int]]] = []
    chunks = [c for c in _TERM_SPLIT.split(squeezed) if c]
    max_index = -1
    for chunk in chunks:
        sign = Fraction(1)
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = Fraction(-1)
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in polynomial text {text!r}")
        coeff = sign
        exps: dict[int, int] = {}
        for factor in chunk.split("*"):
            m = _VAR_RE.match(factor)
            if m:
                idx = int(m.group(1))
                exp = int(m.group(2) or 1)
                exps[idx] = exps.get(idx, 0) + exp
                max_index = max(max_index, idx)
                continue
            if _NUM_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            raise ValueError(f"cannot parse factor {factor!r} in polynomial text")
        raw_terms.append((coeff, exps))
    if num_vars is None:
        num_vars = max_index + 1 if max_index >= 0 else 1
    if max_index >= num_vars:
        raise RingMismatchError(f"variable z{max_index} exceeds declared ring size {num_vars}")
    terms: dict[Monomial, Fraction] = {}
    for coeff, exps in raw_terms:
        mono = tuple(exps.get(i, 0) for i in range(num_vars))
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return MultiPoly(num_vars, terms)


# ---------------------------------------------------------------------------
# Linear forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """A linear form z0 + c1*z1 + ... + cs*zs, monic in z0.

    `coeffs` holds the coefficients of z1..zs; the z0 coefficient is
    fixed at 1, which is the only case the factorization routines need.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[int | str | Fraction]):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in coeffs))

    @property
    def num_vars(self) -> int:
        return len(self.coeffs) + 1

    def to_poly(self, num_vars: int | None = None) -> MultiPoly:
        nv = self.num_vars if num_vars is None else num_vars
        if nv < self.num_vars:
            raise RingMismatchError(f"linear form needs at least {self.num_vars} variables")
        terms: dict[Monomial, Fraction] = {}
        exps = [0] * nv
        exps[0] = 1
        terms[tuple(exps)] = Fraction(1)
        for i, c in enumerate(self.coeffs, start=1):
            if c:
                exps = [0] * nv
                exps[i] = 1
                terms[tuple(exps)] = c
        return MultiPoly(nv, terms)

    def sort_key(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Graded-lex key on the coefficient vector (grade = coefficient sum)."""
        return (sum(self.coeffs, Fraction(0)), self.coeffs)

    def to_text(self) -> str:
        """Compact rendering used inside factored products, e.g. `z0-2*z1`."""
        out = "z0"
        for i, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            out += f"{sign}z{i}" if mag == 1 else f"{sign}{_frac_text(mag)}*z{i}"
        return out

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

PolyMatrix = Sequence[Sequence[MultiPoly]]


def _check_square(matrix: PolyMatrix) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ShapeError(f"matrix is not square: {n} rows, row of length {len(row)}")
    if n == 0:
        return 0
    nv = matrix[0][0].num_vars
    for row in matrix:
        for entry in row:
            if entry.num_vars != nv:
                raise RingMismatchError("matrix entries live in different polynomial rings")
    return n


def determinant(matrix: PolyMatrix) -> MultiPoly:
    """Exact determinant by fraction-free Bareiss elimination.

    Row swaps track the sign; every interior division is exact by the
    Bareiss identity.  If a pivot column is entirely zero the matrix is
    singular over the fraction field (cofactor expansion along that
    column would yield 0 term by term), so the zero polynomial is
    returned.
    """
    n = _check_square(matrix)
    if n == 0:
        raise ShapeError("determinant of an empty matrix is not defined here")
    nv = matrix[0][0].num_vars
    m = [list(row) for row in matrix]
    sign = 1
    prev = MultiPoly.one(nv)
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if m[r][k]), None)
        if pivot_row is None:
            return MultiPoly.zero(nv)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            left = m[i][k]
            for j in range(k + 1, n):
                num = pivot * m[i][j] - left * m[k][j]
                if num:
                    quo = exact_divide(num, prev)
                    assert quo is not None, "Bareiss interior division must be exact"
                    m[i][j] = quo
                else:
                    m[i][j] = MultiPoly.zero(nv)
            m[i][k] = MultiPoly.zero(nv)
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign > 0 else -result


def determinant_cofactor(matrix: PolyMatrix) -> MultiPoly:
    """Determinant by cofactor expansion with memoized minors.

    Independent of the Bareiss path; used as the small-size oracle.
    """
    n = _check_square(matrix)
    if n == 0:
        raise ShapeError("determinant of an empty matrix is not defined here")
    nv = matrix[0][0].num_vars
    memo: dict[tuple[int, tuple[int, ...]], MultiPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MultiPoly:
        if row == n:
            return MultiPoly.one(nv)
        key = (row, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = MultiPoly.zero(nv)
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


# ---------------------------------------------------------------------------
# Substitution
# ---------------------------------------------------------------------------


def apply_linear_change(p: MultiPoly, matrix: Sequence[Sequence[int | str | Fraction]]) -> MultiPoly:
    """Substitute variables by the row-vector product z -> z*matrix.

    Variable z_j is replaced by the linear combination sum_i M[i][j]*z_i
    (the dot product of z with column j), so the result is p evaluated
    on the transformed variables.  `matrix` must be square of size
    num_vars.
    """
    nv = p.num_vars
    rows = [list(map(_frac, row)) for row in matrix]
    if len(rows) != nv or any(len(row) != nv for row in rows):
        raise ShapeError(f"substitution matrix must be {nv}x{nv}")
    images = []
    for j in range(nv):
        terms = {}
        for i in range(nv):
            if rows[i][j]:
                exps = [0] * nv
                exps[i] = 1
                terms[tuple(exps)] = rows[i][j]
        images.append(MultiPoly(nv, terms))
    # cache powers of each image polynomial as they are needed
    powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.one(nv)} for _ in range(nv)]

    def image_power(j: int, e: int) -> MultiPoly:
        cache = powers[j]
        if e not in cache:
            cache[e] = image_power(j, e - 1) * images[j]
        return cache[e]

    total = MultiPoly.zero(nv)
    for mono, coeff in p.terms.items():
        term = MultiPoly.constant(nv, coeff)
        for j, e in enumerate(mono):
            if e:
                term = term * image_power(j, e)
        total = total + term
    return total


def pad_vars(p: MultiPoly, num_vars: int) -> MultiPoly:
    """Reinterpret p in a larger ring (appending fresh trailing variables)."""
    if num_vars < p.num_vars:
        raise RingMismatchError("pad_vars cannot shrink the ring")
    if num_vars == p.num_vars:
        return p
    pad = (0,) * (num_vars - p.num_vars)
    return _raw(num_vars, {m + pad: c for m, c in p.terms.items()})


def specialize_tail_zero(p: MultiPoly, keep: int) -> MultiPoly:
    """Set variables z_keep..z_{s} to zero, returning a poly in `keep` variables."""
    if not 1 <= keep <= p.num_vars:
        raise RingMismatchError(f"cannot keep {keep} of {p.num_vars} variables")
    terms = {m[:keep]: c for m, c in p.terms.items() if not any(m[keep:])}
    return MultiPoly(keep, terms)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly | None:
    """Return q with p = q*d exactly, or None when d does not divide p.

    Division runs by repeated leading-term elimination in graded-lex
    order; no remainder is ever dropped silently.
    """
    if d.num_vars != p.num_vars:
        raise RingMismatchError("dividend and divisor live in different rings")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    d_mono, d_coeff = d.leading_term()
    quotient: dict[Monomial, Fraction] = {}
    rem = p
    while rem:
        r_mono, r_coeff = rem.leading_term()
        mono = tuple(a - b for a, b in zip(r_mono, d_mono))
        if any(e < 0 for e in mono):
            return None
        coeff = r_coeff / d_coeff
        quotient[mono] = coeff
        rem = rem - MultiPoly(p.num_vars, {mono: coeff}) * d
    return MultiPoly(p.num_vars, quotient)


# ---------------------------------------------------------------------------
# Structure checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureSummary:
    homogeneous_degree: int | None
    z0_multiplicity: int


def structure_checks(p: MultiPoly) -> StructureSummary:
    """Homogeneity degree (None when mixed) and the largest k with z0^k | p.

    The zero polynomial is rejected: every well-formed characteristic
    polynomial is monic, so a zero input signals a bug upstream.
    """
    if p.is_zero():
        raise ValueError("structure_checks undefined for the zero polynomial")
    degrees = {sum(m) for m in p.terms}
    homogeneous = degrees.pop() if len(degrees) == 1 else None
    z0_mult = min(m[0] for m in p.terms)
    return StructureSummary(homogeneous, z0_mult)


# ---------------------------------------------------------------------------
# Linear factor extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationResult:
    """Outcome of greedy trial division by monic linear forms.

    `factors` lists (form, multiplicity) in canonical order; `residual`
    is what remains, so product(form^mult) * residual == input exactly.
    `complete` means the residual is a constant.  `reason` optionally
    explains an incomplete outcome (e.g. 'irrational-spectrum' when the
    candidate grid could not cover the spectrum over Q).
    """

    factors: tuple[tuple[LinearForm, int], ...]
    residual: MultiPoly
    complete: bool
    reason: str | None = None

    def factor_text(self) -> str:
        return "*".join(f"({form.to_text()})^{mult}" for form, mult in self.factors)

    def rebuild(self) -> MultiPoly:
        """Product of the factors times the residual (for verification)."""
        nv = self.residual.num_vars
        out = self.residual
        for form, mult in self.factors:
            out = out * form.to_poly(nv) ** mult
        return out


def _vanishing_points(form: LinearForm, nv: int) -> list[list[Fraction]]:
    # two fixed points on the hyperplane form = 0; cheap necessary test
    points = []
    for seed in ((1, 2, 3), (1, -1, 2)):
        tail = [Fraction(seed[(i - 1) % len(seed)] + (i - 1) // len(seed)) for i in range(1, nv)]
        z0 = -sum((c * t for c, t in zip(form.coeffs, tail)), Fraction(0))
        points.append([z0] + tail)
    return points


def linear_factorization(p: MultiPoly, candidates: Sequence[LinearForm]) -> FactorizationResult:
    """Greedy exact trial division of p by monic linear-form candidates.

    Requires p homogeneous and monic in z0.  Candidates are deduplicated
    and processed in canonical order, each divided out to its full
    multiplicity; the run is complete when the residual is constant.
    """
    summary = structure_checks(p)
    if summary.homogeneous_degree is None:
        raise ValueError("linear_factorization requires a homogeneous polynomial")
    deg = summary.homogeneous_degree
    lead = (deg,) + (0,) * (p.num_vars - 1)
    if p.coefficient(lead) != 1:
        raise ValueError("linear_factorization requires a polynomial monic in z0")
    ordered = sorted(set(candidates), key=LinearForm.sort_key, reverse=True)
    factors: list[tuple[LinearForm, int]] = []
    residual = p
    for form in ordered:
        if form.num_vars > p.num_vars:
            raise RingMismatchError("candidate form has more variables than the polynomial")
        if residual.is_constant():
            break
        if any(p.evaluate(pt) for pt in _vanishing_points(form, p.num_vars)):
            continue
        form_poly = form.to_poly(p.num_vars)
        mult = 0
        while True:
            quo = exact_divide(residual, form_poly)
            if quo is None:
                break
            residual = quo
            mult += 1
        if mult:
            factors.append((form, mult))
    return FactorizationResult(tuple(factors), residual, residual.is_constant())
