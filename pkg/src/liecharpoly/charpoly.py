"""Characteristic polynomials of Lie algebra representations.

For a representation given by matrices A_1..A_s (one per basis element
of an s-dimensional algebra) acting on an n-dimensional space, the
characteristic polynomial is

    p(z0, z1, ..., zs) = det(z0*I + z1*A_1 + ... + zs*A_s),

a homogeneous polynomial of degree n, monic in z0.  This module builds
that polynomial exactly and implements the identities and criteria that
hang off it: the dual and direct-sum identities, the z0^k divisibility
bound from the codimension of [L, L], kernel reduction to the image
algebra, the nilpotency test p_ad = z0^n with its determinant corollary,
the solvability test by complete reducibility, and the power-of-a-
linear-form sufficient condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import liecore, ratmat
from .exactpoly import (
    FactorizationResult,
    LinearForm,
    MultiPoly,
    apply_linear_change,
    determinant,
    linear_factorization,
    pad_vars,
    structure_checks,
)
from .liecore import LieAlgebra
from .ratmat import Matrix


class ConsistencyError(AssertionError):
    """A verified mathematical identity failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Representation:
    """Matrices of a representation, one per basis element, plus dim V."""

    mats: tuple[Matrix, ...]
    space_dim: int

    def __init__(self, mats: Sequence[Matrix], space_dim: int | None = None):
        mats = tuple([list(map(Fraction, row)) for row in m] for m in mats)
        if space_dim is None:
            if not mats:
                raise ValueError("space_dim required for a representation with no matrices")
            space_dim = len(mats[0])
        for m in mats:
            if len(m) != space_dim or any(len(row) != space_dim for row in m):
                raise ValueError(f"representation matrices must be {space_dim}x{space_dim}")
        object.__setattr__(self, "mats", mats)
        object.__setattr__(self, "space_dim", space_dim)

    @property
    def num_generators(self) -> int:
        return len(self.mats)


def rep_from_rows(space_dim: int, rows: Sequence[Sequence[int | str | Fraction]]) -> Representation:
    """Build a Representation from row-major entry lists, one per matrix."""
    mats = []
    for flat in rows:
        flat = [Fraction(x) for x in flat]
        if len(flat) != space_dim * space_dim:
            raise ValueError(f"expected {space_dim * space_dim} entries, got {len(flat)}")
        mats.append([flat[r * space_dim : (r + 1) * space_dim] for r in range(space_dim)])
    return Representation(mats, space_dim)


def adjoint_rep(L: LieAlgebra) -> Representation:
    """The adjoint representation in the algebra's own basis order."""
    return Representation(liecore.ad_basis(L), L.dim)


@dataclass(frozen=True)
class RepReport:
    ok: bool
    violations: tuple[tuple[int, int], ...]


def rep_validate(L: LieAlgebra, rep: Representation) -> RepReport:
    """Check the homomorphism property on all basis pairs.

    phi([ei, ej]) must equal phi(ei)phi(ej) - phi(ej)phi(ei); violations
    are reported as 0-indexed pairs (i, j).
    """
    if rep.num_generators != L.dim:
        raise ValueError("representation has wrong number of matrices for this algebra")
    bad = []
    n = rep.space_dim
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            coords = L.pair_bracket(i, j)
            lhs = ratmat.zeros(n, n)
            for k, coeff in enumerate(coords):
                if coeff:
                    lhs = ratmat.mat_add(lhs, ratmat.mat_scale(rep.mats[k], coeff))
            rhs = ratmat.mat_sub(
                ratmat.mat_mul(rep.mats[i], rep.mats[j]),
                ratmat.mat_mul(rep.mats[j], rep.mats[i]),
            )
            if not ratmat.mat_eq(lhs, rhs):
                bad.append((i, j))
    return RepReport(not bad, tuple(bad))


# ---------------------------------------------------------------------------
# The characteristic polynomial
# ---------------------------------------------------------------------------


def charpoly_matrix(rep: Representation) -> list[list[MultiPoly]]:
    """The n x n polynomial matrix z0*I + sum zi*A_i."""
    s = rep.num_generators
    n = rep.space_dim
    nv = s + 1
    entries = []
    for r in range(n):
        row = []
        for c in range(n):
            terms: dict[tuple[int, ...], Fraction] = {}
            if r == c:
                terms[(1,) + (0,) * s] = Fraction(1)
            for i in range(s):
                val = rep.mats[i][r][c]
                if val:
                    exps = [0] * nv
                    exps[i + 1] = 1
                    terms[tuple(exps)] = val
            row.append(MultiPoly(nv, terms))
        entries.append(row)
    return entries


@dataclass(frozen=True)
class CharPolyResult:
    poly: MultiPoly
    space_dim: int
    factored: FactorizationResult | None = None

    @property
    def num_vars(self) -> int:
        return self.poly.num_vars


def char_poly(rep: Representation) -> CharPolyResult:
    """Exact characteristic polynomial of a representation.

    The result is checked to be homogeneous of degree dim V and monic in
    z0; a failure raises ConsistencyError since it cannot happen for
    well-formed input.
    """
    poly = determinant(charpoly_matrix(rep))
    n = rep.space_dim
    summary = structure_checks(poly)
    lead = (n,) + (0,) * rep.num_generators
    if summary.homogeneous_degree != n or poly.coefficient(lead) != 1:
        raise ConsistencyError("characteristic polynomial is not monic homogeneous of degree dim V")
    return CharPolyResult(poly, n)


# ---------------------------------------------------------------------------
# Dual and direct sum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualResult:
    dual_rep: Representation
    verified: bool


def dual_identity(rep: Representation) -> DualResult:
    """Build the dual representation and verify its charpoly identity.

    The dual acts by phi*(x) = -phi(x)^T, and its characteristic
    polynomial must equal (-1)^n * p(-z0, z1, ..., zs) with n = dim V.
    """
    dual = Representation(
        [[[-m[c][r] for c in range(rep.space_dim)] for r in range(rep.space_dim)] for m in rep.mats],
        rep.space_dim,
    )
    p = char_poly(rep).poly
    p_dual = char_poly(dual).poly
    flip = ratmat.identity(p.num_vars)
    flip[0][0] = Fraction(-1)
    expected = apply_linear_change(p, flip)
    if rep.space_dim % 2:
        expected = -expected
    return DualResult(dual, p_dual == expected)


@dataclass(frozen=True)
class DirectSumResult:
    rep: Representation
    verified: bool


def direct_sum(rep_u: Representation, rep_v: Representation) -> DirectSumResult:
    """Block-diagonal sum; verifies p_{U+V} = p_U * p_V exactly."""
    if rep_u.num_generators != rep_v.num_generators:
        raise ValueError("direct sum requires representations of the same algebra")
    nu, nv = rep_u.space_dim, rep_v.space_dim
    mats = []
    for a, b in zip(rep_u.mats, rep_v.mats):
        block = ratmat.zeros(nu + nv, nu + nv)
        for r in range(nu):
            for c in range(nu):
                block[r][c] = a[r][c]
        for r in range(nv):
            for c in range(nv):
                block[nu + r][nu + c] = b[r][c]
        mats.append(block)
    total = Representation(mats, nu + nv)
    verified = char_poly(total).poly == char_poly(rep_u).poly * char_poly(rep_v).poly
    return DirectSumResult(total, verified)


# ---------------------------------------------------------------------------
# Nilpotency
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NilpotencyVerdicts:
    theorem_verdict: bool
    corollary_verdict: bool
    p_ad: MultiPoly


def nilpotency_tests(L: LieAlgebra) -> NilpotencyVerdicts:
    """Both nilpotency criteria read off the adjoint representation.

    The theorem route compares p_ad with z0^n exactly; the corollary
    route computes det(I + sum zi*ad_{e_i}) as an independent
    determinant (z0 specialized to 1 in the generic matrix) and compares
    with the constant 1.  The two verdicts agree for every algebra; a
    mismatch raises ConsistencyError.
    """
    n = L.dim
    ad = adjoint_rep(L)
    p_ad = char_poly(ad).poly
    target = MultiPoly(n + 1, {(n,) + (0,) * n: 1})
    theorem = p_ad == target
    specialized = [[_set_z0_one(entry) for entry in row] for row in charpoly_matrix(ad)]
    corollary = determinant(specialized) == MultiPoly.one(n + 1)
    if theorem != corollary:
        raise ConsistencyError("nilpotency theorem and corollary verdicts disagree")
    return NilpotencyVerdicts(theorem, corollary, p_ad)


def _set_z0_one(p: MultiPoly) -> MultiPoly:
    terms: dict[tuple[int, ...], Fraction] = {}
    for mono, coeff in p.terms.items():
        key = (0,) + mono[1:]
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MultiPoly(p.num_vars, terms)


@dataclass(frozen=True)
class CodimCheck:
    codim: int
    z0_multiplicity: int
    holds: bool


def codim_factor_check(L: LieAlgebra) -> CodimCheck:
    """z0^k divides p_ad, where k is the codimension of [L, L].

    This holds for every Lie algebra; `holds` is reported rather than
    asserted so corpus sweeps can count successes explicitly.
    """
    codim = L.dim - len(liecore.derived_subalgebra(L))
    p_ad = char_poly(adjoint_rep(L)).poly
    mult = structure_checks(p_ad).z0_multiplicity
    return CodimCheck(codim, mult, mult >= codim)


# ---------------------------------------------------------------------------
# Kernel reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelReduction:
    image_rep: Representation
    kernel_dim: int
    D: Matrix
    verified: bool


def kernel_reduction(L: LieAlgebra, rep: Representation) -> KernelReduction:
    """Reduce p_phi to the image algebra phi(L) by a change of variables.

    Writes L in an adapted basis {y_1..y_{s-t}, x_1..x_t} where the x's
    span ker phi and the images phi(y_k) are a basis of phi(L); then

        p_phi(z) = p_{phi(L)}(z * D),   D = blockdiag(1, P^T),

    with P the transition matrix from the original basis to the adapted
    one.  The identity is verified exactly on the given representation.
    """
    s = rep.num_generators
    if s != L.dim:
        raise ValueError("representation does not match the algebra dimension")
    n = rep.space_dim
    # columns of `flat` are the vectorized generator images
    flat = [[rep.mats[i][r][c] for i in range(s)] for r in range(n) for c in range(n)]
    _, pivots = ratmat.rref(flat)
    kernel_vecs = ratmat.kernel(flat)
    t = len(kernel_vecs)
    image_indices = list(pivots)
    adapted = [ratmat.vec([1 if r == i else 0 for r in range(s)]) for i in image_indices]
    adapted += [list(v) for v in kernel_vecs]
    if len(adapted) != s:
        raise ConsistencyError("adapted basis has wrong size")
    Q = [[adapted[c][r] for c in range(s)] for r in range(s)]
    P = ratmat.inverse(Q)
    D = ratmat.identity(s + 1)
    for r in range(s):
        for c in range(s):
            D[r + 1][c + 1] = P[c][r]
    image_rep = Representation([rep.mats[i] for i in image_indices], n)
    p_full = char_poly(rep).poly
    p_image = char_poly(image_rep).poly
    verified = apply_linear_change(pad_vars(p_image, s + 1), D) == p_full
    return KernelReduction(image_rep, t, D, verified)


# ---------------------------------------------------------------------------
# Solvability
# ---------------------------------------------------------------------------


def eigenvalue_grid(rep: Representation) -> tuple[list[LinearForm], bool]:
    """Candidate linear factors from per-generator rational spectra.

    Setting all variables but z0 and z_i to zero turns the charpoly into
    det(z0*I + z_i*A_i), whose roots in z0/z_i are the negated
    eigenvalues of A_i; hence any linear factor z0 + sum c_i*z_i must
    draw each c_i from the eigenvalues of A_i.  Returns the Cartesian
    product of the rational eigenvalue lists and a flag telling whether
    every spectrum was fully rational.
    """
    per_gen: list[list[Fraction]] = []
    all_rational = True
    for m in rep.mats:
        coeffs = ratmat.char_poly_coeffs(m)
        roots, leftover = ratmat.rational_roots(coeffs)
        if leftover:
            all_rational = False
        values = sorted({r for r, _ in roots})
        if not values:
            # a generator with no rational eigenvalue rules out every candidate
            return [], False
        per_gen.append(values)
    total = 1
    for values in per_gen:
        total *= len(values)
    if total > 200_000:
        raise ValueError(f"eigenvalue grid of size {total} exceeds the supported scale")
    return [LinearForm(combo) for combo in product(*per_gen)], all_rational


@dataclass(frozen=True)
class SolvabilityResult:
    oracle: bool
    factorization: FactorizationResult
    outcome: str
    consistent: bool


def solvability_test(L: LieAlgebra, rep: Representation) -> SolvabilityResult:
    """Solvability criterion: L is solvable iff p_phi splits into linear factors.

    The series oracle gives ground truth; the factorization side trial-
    divides by the eigenvalue grid.  Over Q a solvable algebra whose
    generator spectra contain irrational eigenvalues cannot split, so
    that case is reported with outcome 'undetermined-over-Q' instead of
    being counted against the criterion.
    """
    oracle = liecore.classify_oracle(L).solvable
    grid, all_rational = eigenvalue_grid(rep)
    result = linear_factorization(char_poly(rep).poly, grid)
    if not all_rational and not result.complete:
        result = FactorizationResult(
            result.factors, result.residual, False, "irrational-spectrum"
        )
    if oracle and result.complete:
        outcome, consistent = "solvable-confirmed", True
    elif not oracle and not result.complete:
        outcome, consistent = "non-solvable-confirmed", True
    elif oracle and result.reason == "irrational-spectrum":
        outcome, consistent = "undetermined-over-Q", True
    else:
        outcome, consistent = "inconsistent", False
    return SolvabilityResult(oracle, result, outcome, consistent)


# ---------------------------------------------------------------------------
# Power of a linear form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerLinearResult:
    is_power_of_linear_form: bool
    form: LinearForm | None
    implied_nilpotent: bool | None  # None = inconclusive


def power_linear_test(rep: Representation) -> PowerLinearResult:
    """Test p = f^n for a single linear form f; a yes implies nilpotency.

    The candidate f is read off deterministically: its z_i coefficient
    must be the z0^(n-1)*z_i coefficient of p divided by n.  A negative
    answer is inconclusive since non-power charpolys can still belong to
    nilpotent matrix algebras.
    """
    p = char_poly(rep).poly
    n = rep.space_dim
    s = rep.num_generators
    coeffs = []
    for i in range(1, s + 1):
        mono = [0] * (s + 1)
        mono[0] = n - 1
        mono[i] = 1
        coeffs.append(p.coefficient(mono) / n)
    form = LinearForm(coeffs)
    if form.to_poly(s + 1) ** n == p:
        return PowerLinearResult(True, form, True)
    return PowerLinearResult(False, None, None)
