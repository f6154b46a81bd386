"""Finite-dimensional Lie algebras given by structure constants.

A LieAlgebra stores, for each basis pair i < j, the coordinate vector of
[e_i, e_j]; antisymmetry and [e_i, e_i] = 0 are then structural and can
never be inconsistent.  Elements are plain coordinate vectors (lists of
Fraction) in the ambient basis.

The module also defines the algebra text format shared with the command
line tool:

    # optional comments
    dim 4
    basis e1 e2 e3 e4
    bracket [1, 3, [1:-1]]
    bracket [1, 4, [2:-1]]

Each bracket line gives [e_i, e_j] = sum coeff*e_k with 1-indexed basis
positions and i < j required; unlisted pairs are zero.  Parsing rejects
documents whose constants violate the Jacobi identity, so a parsed
algebra is always valid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import ratmat
from .ratmat import Matrix, Vector


class AlgebraFormatError(ValueError):
    """Parse or validation failure with a line anchor and an error code.

    Codes: 'syntax' (malformed line), 'index-order' (bracket with
    i >= j), 'range' (basis index outside 1..dim), 'jacobi' (constants
    fail the Jacobi identity).
    """

    def __init__(self, code: str, line_no: int, message: str):
        super().__init__(f"line {line_no}: [{code}] {message}" if line_no else f"[{code}] {message}")
        self.code = code
        self.line_no = line_no
        self.message = message


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra by structure constants on a named basis.

    `c` maps ordered pairs (i, j) with i < j (0-indexed) to the full
    coordinate vector of [e_i, e_j]; missing pairs bracket to zero.
    """

    dim: int
    basis_names: tuple[str, ...]
    c: Mapping[tuple[int, int], tuple[Fraction, ...]]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("algebra dimension must be positive")
        if len(self.basis_names) != self.dim:
            raise ValueError("basis name count does not match dim")
        clean = {}
        for (i, j), v in self.c.items():
            if not 0 <= i < j < self.dim:
                raise ValueError(f"structure constant key ({i},{j}) must satisfy 0 <= i < j < dim")
            if len(v) != self.dim:
                raise ValueError(f"structure constant vector for ({i},{j}) has wrong length")
            vv = tuple(Fraction(x) for x in v)
            if any(vv):
                clean[(i, j)] = vv
        object.__setattr__(self, "c", clean)

    def pair_bracket(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a coordinate vector, any order of i, j."""
        if i == j:
            return [Fraction(0)] * self.dim
        if i < j:
            v = self.c.get((i, j))
            return list(v) if v else [Fraction(0)] * self.dim
        v = self.c.get((j, i))
        return [-x for x in v] if v else [Fraction(0)] * self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.basis_names == other.basis_names
            and dict(self.c) == dict(other.c)
        )

    def __hash__(self):
        return hash((self.dim, self.basis_names, tuple(sorted(self.c.items()))))


def make_algebra(
    dim: int,
    brackets: Mapping[tuple[int, int], Sequence[int | str | Fraction]] | Iterable[tuple[int, int, Mapping[int, int | str | Fraction]]],
    basis_names: Sequence[str] | None = None,
) -> LieAlgebra:
    """Convenience constructor from 0-indexed bracket data.

    `brackets` is either a map (i, j) -> full coefficient vector or an
    iterable of (i, j, {k: coeff}) sparse entries.
    """
    names = tuple(basis_names) if basis_names else tuple(f"e{i+1}" for i in range(dim))
    table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    if isinstance(brackets, Mapping):
        for (i, j), v in brackets.items():
            table[(i, j)] = tuple(Fraction(x) for x in v)
    else:
        for i, j, sparse in brackets:
            v = [Fraction(0)] * dim
            for k, coeff in sparse.items():
                v[k] = Fraction(coeff)
            table[(i, j)] = tuple(v)
    return LieAlgebra(dim, names, table)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[int, int, int], ...]

    def describe(self, L: LieAlgebra) -> str:
        if self.ok:
            return "ok"
        names = L.basis_names
        triples = ", ".join(f"({names[i]},{names[j]},{names[k]})" for i, j, k in self.violations)
        return f"Jacobi identity fails at {triples}"


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Lie axioms, reporting every offending basis triple.

    Antisymmetry and alternation hold structurally (only i < j pairs are
    stored), so the content check is the Jacobi identity
    [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0 on all i < j < k.
    """
    bad = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                total = [Fraction(0)] * L.dim
                for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = L.pair_bracket(a, b)
                    outer = bracket(L, inner, _unit(L.dim, cc))
                    total = [x + y for x, y in zip(total, outer)]
                if any(total):
                    bad.append((i, j, k))
    return ValidationReport(not bad, tuple(bad))


def _unit(dim: int, i: int) -> Vector:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


# ---------------------------------------------------------------------------
# Brackets and adjoint matrices
# ---------------------------------------------------------------------------


def bracket(L: LieAlgebra, x: Sequence[int | str | Fraction], y: Sequence[int | str | Fraction]) -> Vector:
    """[x, y] by bilinear extension of the structure constants."""
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError("element length does not match algebra dimension")
    xv = [Fraction(v) for v in x]
    yv = [Fraction(v) for v in y]
    out = [Fraction(0)] * L.dim
    for (i, j), v in L.c.items():
        coeff = xv[i] * yv[j] - xv[j] * yv[i]
        if coeff:
            for k in range(L.dim):
                if v[k]:
                    out[k] += coeff * v[k]
    return out


def ad_matrix(L: LieAlgebra, x: Sequence[int | str | Fraction]) -> Matrix:
    """Matrix of ad_x = [x, -]; column j holds the coordinates of [x, e_j]."""
    cols = [bracket(L, x, _unit(L.dim, j)) for j in range(L.dim)]
    return [[cols[j][k] for j in range(L.dim)] for k in range(L.dim)]


def ad_basis(L: LieAlgebra) -> list[Matrix]:
    """Adjoint matrices of the basis elements, in basis order."""
    return [ad_matrix(L, _unit(L.dim, i)) for i in range(L.dim)]


# ---------------------------------------------------------------------------
# Series and classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubspaceChain:
    """A descending chain of subspaces, each a canonical rref basis."""

    kind: str
    bases: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def terminates_at_zero(self) -> bool:
        return len(self.bases[-1]) == 0


def _bracket_span(L: LieAlgebra, left: Sequence[Vector], right: Sequence[Vector]) -> list[Vector]:
    products = [bracket(L, u, v) for u in left for v in right]
    return ratmat.span_basis([p for p in products if any(p)], L.dim)


def series(L: LieAlgebra, kind: str) -> SubspaceChain:
    """Derived series ([S,S] repeated) or lower central series ([L,S]).

    The chain starts at L itself and stops once two consecutive terms
    are equal; at most dim+1 steps are needed, which the loop enforces.
    """
    if kind not in ("derived", "lower_central"):
        raise ValueError(f"unknown series kind {kind!r}")
    full = [_unit(L.dim, i) for i in range(L.dim)]
    chain = [ratmat.span_basis(full, L.dim)]
    for _ in range(L.dim + 1):
        prev = [list(v) for v in chain[-1]]
        left = full if kind == "lower_central" else prev
        nxt = _bracket_span(L, left, prev)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    frozen = tuple(tuple(tuple(row) for row in basis) for basis in chain)
    return SubspaceChain(kind, frozen)


@dataclass(frozen=True)
class Classification:
    solvable: bool
    nilpotent: bool


def classify_oracle(L: LieAlgebra) -> Classification:
    """Ground-truth solvability and nilpotency from the series.

    Nilpotent implies solvable; the pair is asserted to respect that.
    """
    solvable = series(L, "derived").terminates_at_zero()
    nilpotent = series(L, "lower_central").terminates_at_zero()
    assert not nilpotent or solvable, "nilpotent algebra classified non-solvable"
    return Classification(solvable, nilpotent)


def derived_subalgebra(L: LieAlgebra) -> list[Vector]:
    """Canonical basis of [L, L]."""
    full = [_unit(L.dim, i) for i in range(L.dim)]
    return _bracket_span(L, full, full)


def center(L: LieAlgebra) -> list[Vector]:
    """Canonical basis of the center {x : [x, e_j] = 0 for all j}.

    The condition is linear in x: stacking the coefficient of e_k in
    [x, e_j] over all (j, k) gives a dim^2 x dim system whose kernel is
    the center.
    """
    rows: Matrix = []
    for j in range(L.dim):
        for k in range(L.dim):
            rows.append([L.pair_bracket(i, j)[k] for i in range(L.dim)])
    return ratmat.span_basis(ratmat.kernel(rows), L.dim)


# ---------------------------------------------------------------------------
# Change of basis
# ---------------------------------------------------------------------------


def change_basis(L: LieAlgebra, P: Matrix, basis_names: Sequence[str] | None = None) -> LieAlgebra:
    """Rewrite the structure constants on the basis given by P's columns.

    Column i of P holds the coordinates of the new basis vector x_i in
    the old basis, so [x_i, x_j] is computed in old coordinates and
    converted back through P^{-1}.  Raises ValueError when P is
    singular.
    """
    rows, cols = ratmat.shape(P)
    if rows != L.dim or cols != L.dim:
        raise ValueError(f"change of basis matrix must be {L.dim}x{L.dim}")
    p_inv = ratmat.inverse(P)
    new_vectors = [[P[r][i] for r in range(L.dim)] for i in range(L.dim)]
    table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            old = bracket(L, new_vectors[i], new_vectors[j])
            table[(i, j)] = tuple(ratmat.mat_vec(p_inv, old))
    names = tuple(basis_names) if basis_names else tuple(f"x{i+1}" for i in range(L.dim))
    return LieAlgebra(L.dim, names, table)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_BRACKET_RE = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*,\s*\[([^\]]*)\]\s*\]$")
_COEFF_RE = re.compile(r"^(\d+)\s*:\s*(-?\d+(?:/\d+)?)$")


def strip_comment(line: str) -> str:
    hash_pos = line.find("#")
    return line if hash_pos < 0 else line[:hash_pos]


def parse_bracket_entry(body: str, dim: int, line_no: int) -> tuple[int, int, dict[int, Fraction]]:
    """Parse `[i, j, [k1:coeff, ...]]` into 0-indexed components."""
    m = _BRACKET_RE.match(body.strip())
    if not m:
        raise AlgebraFormatError("syntax", line_no, f"malformed bracket entry {body.strip()!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if not (1 <= i <= dim and 1 <= j <= dim):
        raise AlgebraFormatError("range", line_no, f"bracket indices ({i},{j}) outside 1..{dim}")
    if i >= j:
        raise AlgebraFormatError("index-order", line_no, f"bracket entry requires i < j, got ({i},{j})")
    coeffs: dict[int, Fraction] = {}
    inner = m.group(3).strip()
    if inner:
        for piece in inner.split(","):
            cm = _COEFF_RE.match(piece.strip())
            if not cm:
                raise AlgebraFormatError("syntax", line_no, f"malformed coefficient {piece.strip()!r}")
            k = int(cm.group(1))
            if not 1 <= k <= dim:
                raise AlgebraFormatError("range", line_no, f"coefficient index {k} outside 1..{dim}")
            coeffs[k - 1] = coeffs.get(k - 1, Fraction(0)) + Fraction(cm.group(2))
    return i - 1, j - 1, coeffs


def parse_algebra(text: str) -> LieAlgebra:
    """Parse the algebra text format and validate the result.

    Comments (`#` to end of line) and blank lines are ignored.  The
    returned algebra always passes `validate`; otherwise an
    AlgebraFormatError with code 'jacobi' is raised.
    """
    dim: int | None = None
    names: list[str] | None = None
    entries: list[tuple[int, int, dict[int, Fraction]]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw).strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "dim":
            if dim is not None:
                raise AlgebraFormatError("syntax", line_no, "duplicate dim field")
            if not rest.isdigit() or int(rest) < 1:
                raise AlgebraFormatError("syntax", line_no, f"dim must be a positive integer, got {rest!r}")
            dim = int(rest)
        elif keyword == "basis":
            if dim is None:
                raise AlgebraFormatError("syntax", line_no, "basis before dim")
            if names is not None:
                raise AlgebraFormatError("syntax", line_no, "duplicate basis field")
            names = rest.split()
            if len(names) != dim:
                raise AlgebraFormatError("syntax", line_no, f"expected {dim} basis names, got {len(names)}")
            for name in names:
                if not _NAME_RE.match(name):
                    raise AlgebraFormatError("syntax", line_no, f"invalid basis name {name!r}")
        elif keyword == "bracket":
            if dim is None:
                raise AlgebraFormatError("syntax", line_no, "bracket before dim")
            i, j, coeffs = parse_bracket_entry(rest, dim, line_no)
            if any((i, j) == (ei, ej) for ei, ej, _ in entries):
                raise AlgebraFormatError("syntax", line_no, f"duplicate bracket entry for ({i+1},{j+1})")
            entries.append((i, j, coeffs))
        else:
            raise AlgebraFormatError("syntax", line_no, f"unknown field {keyword!r}")
    if dim is None:
        raise AlgebraFormatError("syntax", 0, "missing dim field")
    L = make_algebra(dim, entries, names)
    report = validate(L)
    if not report.ok:
        raise AlgebraFormatError("jacobi", 0, "brackets: " + report.describe(L))
    return L


def render_algebra(L: LieAlgebra, header: str | None = None) -> str:
    """Canonical text form, parseable back to an equal algebra."""
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.append(f"dim {L.dim}")
    lines.append("basis " + " ".join(L.basis_names))
    for (i, j) in sorted(L.c):
        v = L.c[(i, j)]
        body = ", ".join(f"{k+1}:{_frac_text(v[k])}" for k in range(L.dim) if v[k])
        lines.append(f"bracket [{i+1}, {j+1}, [{body}]]")
    return "\n".join(lines) + "\n"


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
