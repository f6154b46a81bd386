"""Weights, characters and linearized characteristic polynomials for sl_n.

Weights of sl_n representations are kept in eps-coordinates: an integer
vector (eps_1, ..., eps_n) with non-negative entries recording the
content of a semistandard tableau, so the Weyl group S_n acts by
literally permuting coordinates.  The pairing against the Cartan basis
h_i = E_ii - E_{i+1,i+1} is the difference eps_i - eps_{i+1}, which is
what enters linearized polynomials.

The linearization of a characteristic polynomial sets every root-vector
variable to zero, leaving z0 and the Cartan variables z1..zl; by weight
theory the result splits into integer linear forms

    prod over weights (z0 + sum (eps_i - eps_{i+1}) z_i) ^ multiplicity,

and LinearizedPoly stores exactly that factored multiset.  The
resolution product * mirrors the tensor product on these factored
forms: all pairwise coefficient sums, multiplicities multiplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from . import ratmat
from .charpoly import Representation
from .exactpoly import LinearForm, MultiPoly, linear_factorization, specialize_tail_zero
from .liecore import LieAlgebra, make_algebra

Eps = tuple[int, ...]


class EmptyRepresentationError(ValueError):
    """A partition with more rows than n labels no sl_n representation."""


class NotSplitError(ValueError):
    """A claimed linearization did not split into integer linear forms."""


# ---------------------------------------------------------------------------
# Partitions and dominant weights
# ---------------------------------------------------------------------------


def normalize_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be non-negative")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError("partition parts must be weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partition_from_dominant(a: Sequence[int]) -> tuple[int, ...]:
    """Partition (lambda_1 >= ... >= lambda_{n-1}) from fundamental-weight
    coefficients: lambda_i = a_i + a_{i+1} + ... + a_{n-1}."""
    a = list(a)
    if any(x < 0 for x in a):
        raise ValueError("dominant weight coefficients must be non-negative")
    parts = []
    running = 0
    for x in reversed(a):
        running += x
        parts.append(running)
    return normalize_partition(tuple(reversed(parts)))


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------


class CharacterElt:
    """A finite weight multiset: eps-vector -> positive multiplicity."""

    __slots__ = ("rank", "mult")

    def __init__(self, rank: int, mult: Mapping[Eps, int]):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        clean: dict[Eps, int] = {}
        for eps, m in mult.items():
            eps = tuple(int(x) for x in eps)
            if len(eps) != rank + 1:
                raise ValueError(f"eps vector {eps} has wrong length for rank {rank}")
            m = int(m)
            if m < 0:
                raise ValueError("multiplicities must be non-negative")
            if m:
                clean[eps] = clean.get(eps, 0) + m
        self.rank = rank
        self.mult = clean

    @property
    def n(self) -> int:
        return self.rank + 1

    def dim(self) -> int:
        return sum(self.mult.values())

    def items(self) -> list[tuple[Eps, int]]:
        return sorted(self.mult.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterElt):
            return NotImplemented
        return self.rank == other.rank and self.mult == other.mult

    def __repr__(self) -> str:
        return f"CharacterElt(rank={self.rank}, mult={dict(self.items())!r})"


def trivial_character(rank: int) -> CharacterElt:
    return CharacterElt(rank, {(0,) * (rank + 1): 1})


def weight_multiplicities(parts: Sequence[int], n: int) -> CharacterElt:
    """Weight multiplicities of V(lambda) for sl_n by tableau counting.

    Enumerates semistandard Young tableaux of shape lambda with entries
    in 1..n (rows weakly increasing, columns strictly increasing); the
    multiplicity of an eps-vector is the number of tableaux with that
    content, i.e. a Kostka number, and the total count is dim V(lambda).
    """
    shape = normalize_partition(parts)
    if len(shape) > n:
        raise EmptyRepresentationError(
            f"partition with {len(shape)} rows has no sl_{n} representation"
        )
    if not shape:
        return trivial_character(n - 1)
    counts: dict[Eps, int] = {}
    rows = len(shape)
    tableau = [[0] * shape[r] for r in range(rows)]
    content = [0] * n

    def fill(r: int, c: int) -> None:
        if r == rows:
            counts[tuple(content)] = counts.get(tuple(content), 0) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        low = tableau[r][c - 1] if c > 0 else 1
        if r > 0 and c < shape[r - 1]:
            low = max(low, tableau[r - 1][c] + 1)
        for v in range(low, n + 1):
            tableau[r][c] = v
            content[v - 1] += 1
            fill(nr, nc)
            content[v - 1] -= 1

    fill(0, 0)
    return CharacterElt(n - 1, counts)


def tensor_character(ch_u: CharacterElt, ch_v: CharacterElt) -> CharacterElt:
    """Character of the tensor product: convolution of weight multisets."""
    if ch_u.rank != ch_v.rank:
        raise ValueError("tensor_character requires characters of the same rank")
    out: dict[Eps, int] = {}
    for eu, mu in ch_u.mult.items():
        for ev, mv in ch_v.mult.items():
            key = tuple(a + b for a, b in zip(eu, ev))
            out[key] = out.get(key, 0) + mu * mv
    return CharacterElt(ch_u.rank, out)


def pairing_values(eps: Eps) -> tuple[int, ...]:
    """Values of the weight on h_1..h_{n-1}: consecutive differences."""
    return tuple(eps[i] - eps[i + 1] for i in range(len(eps) - 1))


# ---------------------------------------------------------------------------
# Linearized polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearizedPoly:
    """Canonical factored product of integer monic linear forms.

    `factors` is sorted descending by (coefficient sum, coefficients),
    the same graded-lex order used for polynomial terms; `rank` is the
    number of Cartan variables z1..zl each factor carries.
    """

    rank: int
    factors: tuple[tuple[LinearForm, int], ...]

    def __init__(self, rank: int, factors: Sequence[tuple[LinearForm, int]]):
        merged: dict[LinearForm, int] = {}
        for form, mult in factors:
            if len(form.coeffs) != rank:
                raise ValueError(f"factor {form} has wrong rank (expected {rank})")
            if any(c.denominator != 1 for c in form.coeffs):
                raise ValueError(f"factor {form} has non-integer coefficients")
            mult = int(mult)
            if mult < 0:
                raise ValueError("factor multiplicities must be non-negative")
            if mult:
                merged[form] = merged.get(form, 0) + mult
        ordered = sorted(merged, key=LinearForm.sort_key, reverse=True)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "factors", tuple((f, merged[f]) for f in ordered))

    @classmethod
    def identity(cls, rank: int) -> LinearizedPoly:
        """The bare factor z0, the identity of the resolution product."""
        return cls(rank, [(LinearForm([0] * rank), 1)])

    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def __mul__(self, other: LinearizedPoly) -> LinearizedPoly:
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError("cannot multiply linearized polynomials of different rank")
        return LinearizedPoly(self.rank, list(self.factors) + list(other.factors))

    def expand(self) -> MultiPoly:
        """The expanded MultiPoly in variables z0..zl."""
        out = MultiPoly.one(self.rank + 1)
        for form, mult in self.factors:
            out = out * form.to_poly(self.rank + 1) ** mult
        return out

    def to_text(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"({form.to_text()})^{mult}" for form, mult in self.factors)

    def __str__(self) -> str:
        return self.to_text()


def resolution_product(f: LinearizedPoly, g: LinearizedPoly) -> LinearizedPoly:
    """All pairwise sums of factor coefficients, multiplicities multiplied.

    Mirrors the tensor product on linearizations; z0 (the identity
    factor) is neutral.
    """
    if f.rank != g.rank:
        raise ValueError("resolution product requires equal ranks")
    combined: list[tuple[LinearForm, int]] = []
    for form_f, mult_f in f.factors:
        for form_g, mult_g in g.factors:
            summed = LinearForm([a + b for a, b in zip(form_f.coeffs, form_g.coeffs)])
            combined.append((summed, mult_f * mult_g))
    return LinearizedPoly(f.rank, combined)


def linearize_from_character(ch: CharacterElt) -> LinearizedPoly:
    """One factor z0 + sum (eps_i - eps_{i+1}) z_i per weight, to its
    multiplicity."""
    factors = [
        (LinearForm(pairing_values(eps)), mult) for eps, mult in ch.mult.items()
    ]
    return LinearizedPoly(ch.rank, factors)


def linearize_full(poly: MultiPoly, ell: int) -> LinearizedPoly:
    """Linearize a full characteristic polynomial directly.

    Sets every variable after the Cartan block z1..z_ell to zero, then
    splits the result into integer monic linear forms by trial division
    over a per-variable root grid.  Raises NotSplitError when the
    polynomial does not split that way, which signals invalid input
    rather than a mathematical discovery.
    """
    if not 0 <= ell <= poly.num_vars - 1:
        raise ValueError(f"Cartan count {ell} out of range for {poly.num_vars} variables")
    tilde = specialize_tail_zero(poly, ell + 1)
    if tilde.is_zero():
        raise NotSplitError("linearization vanished; input was not monic in z0")
    per_var: list[list[Fraction]] = []
    for i in range(1, ell + 1):
        uni = _univariate_in(tilde, i)
        roots, leftover = ratmat.rational_roots(uni)
        if leftover:
            raise NotSplitError(f"irrational weight coordinates in variable z{i}")
        per_var.append(sorted({-r for r, _ in roots}))
    candidates = [LinearForm(combo) for combo in product(*per_var)]
    result = linear_factorization(tilde, candidates)
    if not result.complete or result.residual != MultiPoly.one(tilde.num_vars):
        raise NotSplitError("linearized polynomial is not a product of integer linear forms")
    for form, _ in result.factors:
        if any(c.denominator != 1 for c in form.coeffs):
            raise NotSplitError(f"non-integer weight coordinates in factor {form}")
    return LinearizedPoly(ell, list(result.factors))


def _univariate_in(tilde: MultiPoly, i: int) -> list[Fraction]:
    """Coefficients of tilde with z_j = 0 (j != 0, i), z_i = 1, as a
    polynomial in z0."""
    coeffs: dict[int, Fraction] = {}
    for mono, coeff in tilde.terms.items():
        if any(e and j not in (0, i) for j, e in enumerate(mono)):
            continue
        coeffs[mono[0]] = coeffs.get(mono[0], Fraction(0)) + coeff
    deg = max(coeffs) if coeffs else 0
    return [coeffs.get(k, Fraction(0)) for k in range(deg + 1)]


def character_from_linearized(f: LinearizedPoly) -> CharacterElt:
    """Recover a character whose linearization is f (inverse up to the
    overall eps shift, which pairing values cannot see).

    Each factor's coefficients are consecutive eps differences; the eps
    vector is reconstructed with minimum entry zero.
    """
    mult: dict[Eps, int] = {}
    for form, m in f.factors:
        diffs = [int(c) for c in form.coeffs]
        eps = [0] * (f.rank + 1)
        for i in range(f.rank - 1, -1, -1):
            eps[i] = eps[i + 1] + diffs[i]
        low = min(eps)
        key = tuple(e - low for e in eps)
        mult[key] = mult.get(key, 0) + m
    return CharacterElt(f.rank, mult)


def weyl_invariance_check(f: LinearizedPoly, n: int) -> bool:
    """Is the factor multiset stable under the S_n action on eps-coordinates?

    Factors are lifted to eps vectors normalized to minimum entry zero;
    S_n is generated by adjacent transpositions, so stability under each
    generator is equivalent to full Weyl invariance.
    """
    if n != f.rank + 1:
        raise ValueError("n must be rank + 1 for a type A check")
    base: dict[Eps, int] = {}
    for form, m in f.factors:
        eps = _eps_of_form(form)
        base[eps] = base.get(eps, 0) + m
    for k in range(n - 1):
        swapped: dict[Eps, int] = {}
        for eps, m in base.items():
            e = list(eps)
            e[k], e[k + 1] = e[k + 1], e[k]
            key = tuple(e)
            swapped[key] = swapped.get(key, 0) + m
        if swapped != base:
            return False
    return True


def _eps_of_form(form: LinearForm) -> Eps:
    diffs = [int(c) for c in form.coeffs]
    eps = [0] * (len(diffs) + 1)
    for i in range(len(diffs) - 1, -1, -1):
        eps[i] = eps[i + 1] + diffs[i]
    low = min(eps)
    return tuple(e - low for e in eps)


# ---------------------------------------------------------------------------
# sl2 closed form and its matrix oracle
# ---------------------------------------------------------------------------


def sl2_closed_form(m: int) -> MultiPoly:
    """Characteristic polynomial of the (m+1)-dimensional sl2 irreducible.

    Variables are (z0, z1, z2, z3) for the basis order (h, e, f):

        m even: z0 * prod_{i=1..m/2} (z0^2 - (2i)^2 (z1^2 + z2 z3))
        m odd:  prod_{i=0..(m-1)/2} (z0^2 - (2i+1)^2 (z1^2 + z2 z3))
    """
    if m < 0:
        raise ValueError("highest weight must be non-negative")
    z0 = MultiPoly.variable(4, 0)
    core = (
        MultiPoly.variable(4, 1) ** 2
        + MultiPoly.variable(4, 2) * MultiPoly.variable(4, 3)
    )
    if m % 2 == 0:
        out = z0
        weights = range(2, m + 1, 2)
    else:
        out = MultiPoly.one(4)
        weights = range(1, m + 1, 2)
    for w in weights:
        out = out * (z0 * z0 - core * (w * w))
    return out


def sl2_irrep_rep(m: int) -> Representation:
    """Matrices of the sl2 irreducible of highest weight m, basis (h, e, f).

    On the standard ladder v_0..v_m: h v_j = (m-2j) v_j, f v_j = v_{j+1},
    e v_j = j(m-j+1) v_{j-1}; all entries are integers and the bracket
    relations [h,e] = 2e, [h,f] = -2f, [e,f] = h hold exactly.
    """
    if m < 0:
        raise ValueError("highest weight must be non-negative")
    d = m + 1
    h = ratmat.zeros(d, d)
    e = ratmat.zeros(d, d)
    f = ratmat.zeros(d, d)
    for j in range(d):
        h[j][j] = Fraction(m - 2 * j)
    for j in range(1, d):
        e[j - 1][j] = Fraction(j * (m - j + 1))
        f[j][j - 1] = Fraction(1)
    return Representation([h, e, f], d)


def sl2_algebra() -> LieAlgebra:
    """sl2 structure constants on (h, e, f)."""
    return make_algebra(
        3,
        [(0, 1, {1: 2}), (0, 2, {2: -2}), (1, 2, {0: 1})],
        ("h", "e", "f"),
    )


# ---------------------------------------------------------------------------
# sl_n structure constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlnData:
    """sl_n with its canonical basis, Cartan indices and defining matrices."""

    n: int
    algebra: LieAlgebra
    cartan: tuple[int, ...]
    matrices: tuple[ratmat.Matrix, ...]

    @property
    def rank(self) -> int:
        return self.n - 1

    def defining_rep(self) -> Representation:
        return Representation(list(self.matrices), self.n)


def sln_canonical_basis(n: int) -> SlnData:
    """sl_n on the basis h_1..h_{n-1}, then E_ij (i != j) row-major.

    h_i = E_ii - E_{i+1,i+1}; the Cartan indices are 0..n-2, so a
    characteristic polynomial over this basis linearizes with
    ell = n - 1.
    """
    if n < 2:
        raise ValueError("sl_n needs n >= 2")
    mats: list[ratmat.Matrix] = []
    names: list[str] = []
    for i in range(n - 1):
        h = ratmat.zeros(n, n)
        h[i][i] = Fraction(1)
        h[i + 1][i + 1] = Fraction(-1)
        mats.append(h)
        names.append(f"h{i+1}")
    for i in range(n):
        for j in range(n):
            if i != j:
                eij = ratmat.zeros(n, n)
                eij[i][j] = Fraction(1)
                mats.append(eij)
                names.append(f"E{i+1}{j+1}")
    dim = len(mats)
    table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            comm = ratmat.mat_sub(
                ratmat.mat_mul(mats[a], mats[b]), ratmat.mat_mul(mats[b], mats[a])
            )
            table[(a, b)] = tuple(_sl_coordinates(comm, n))
    algebra = LieAlgebra(dim, tuple(names), table)
    return SlnData(n, algebra, tuple(range(n - 1)), tuple(mats))


def _sl_coordinates(m: ratmat.Matrix, n: int) -> list[Fraction]:
    """Coordinates of a traceless matrix in the canonical sl_n basis."""
    coords = [Fraction(0)] * (n * n - 1)
    running = Fraction(0)
    for i in range(n - 1):
        running += m[i][i]
        coords[i] = running
    pos = n - 1
    for i in range(n):
        for j in range(n):
            if i != j:
                coords[pos] = m[i][j]
                pos += 1
    return coords
