"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fraction and vectors are lists of
Fraction.  Everything here is deterministic: pivoting always selects
the leftmost nonzero column and within it the smallest row index, so
reduced row echelon forms, kernels and extracted bases are canonical
for a given input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def mat(rows: Iterable[Iterable[int | str | Fraction]]) -> Matrix:
    """Deep-copy input into a Fraction matrix."""
    return [[Fraction(x) for x in row] for row in rows]


def vec(entries: Iterable[int | str | Fraction]) -> Vector:
    return [Fraction(x) for x in entries]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def shape(a: Sequence[Sequence[Fraction]]) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s: int | Fraction) -> Matrix:
    s = Fraction(s)
    return [[s * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_mat(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    m = [row[:] for row in a]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel(a: Matrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in every other
    free column, so the basis is canonical.
    """
    reduced, pivots = rref(a)
    rows, cols = shape(a)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises ValueError on a singular matrix."""
    n, cols = shape(a)
    if n != cols:
        raise ValueError("only square matrices can be inverted")
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a*x = b, or None when the system is inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    """
    rows, cols = shape(a)
    aug = [row[:] + [bv] for row, bv in zip(a, b)]
    reduced, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][cols]
    return x


# ---------------------------------------------------------------------------
# Subspaces as canonical row bases
# ---------------------------------------------------------------------------


def span_basis(vectors: Sequence[Vector], dim: int) -> list[Vector]:
    """Canonical (rref, zero rows dropped) basis of the span."""
    if not vectors:
        return []
    reduced, pivots = rref([list(v) for v in vectors])
    if any(len(v) != dim for v in vectors):
        raise ValueError("span_basis vectors have inconsistent length")
    return [reduced[i] for i in range(len(pivots))]


def in_span(v: Vector, basis: Sequence[Vector]) -> bool:
    """Membership test against a rref basis (reduce and check residue)."""
    residue = list(v)
    for b in basis:
        lead = next((i for i, x in enumerate(b) if x), None)
        if lead is None:
            continue
        if residue[lead]:
            factor = residue[lead] / b[lead]
            residue = [x - factor * y for x, y in zip(residue, b)]
    return all(not x for x in residue)


def same_span(a: Sequence[Vector], b: Sequence[Vector], dim: int) -> bool:
    return span_basis(a, dim) == span_basis(b, dim)


def extend_to_basis(vectors: Sequence[Vector], dim: int) -> list[Vector]:
    """Extend independent vectors to a basis using standard unit vectors.

    The input vectors are kept verbatim in front; unit vectors e_i are
    appended in index order whenever they enlarge the span.
    """
    chosen = [list(v) for v in vectors]
    if chosen and rank(chosen) != len(chosen):
        raise ValueError("extend_to_basis requires independent input vectors")
    current = span_basis(chosen, dim) if chosen else []
    for i in range(dim):
        if len(chosen) == dim:
            break
        e = [Fraction(0)] * dim
        e[i] = Fraction(1)
        if not in_span(e, current):
            chosen.append(e)
            current = span_basis(chosen, dim)
    return chosen


# ---------------------------------------------------------------------------
# Characteristic polynomial and rational eigenvalues
# ---------------------------------------------------------------------------


def char_poly_coeffs(a: Matrix) -> list[Fraction]:
    """Coefficients [c0, ..., cn] of det(t*I - A) = sum ci * t^i.

    Uses the Faddeev-LeVerrier recurrence, exact over Q; the leading
    coefficient cn is always 1.
    """
    n, cols = shape(a)
    if n != cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        trace = sum((am[i][i] for i in range(n)), Fraction(0))
        c = -trace / k
        coeffs[n - k] = c
        m = mat_add(am, mat_scale(identity(n), c))
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (t - root); remainder must be zero
    out: list[Fraction] = []
    carry = Fraction(0)
    for c in reversed(coeffs):
        carry = c + carry * root
        out.append(carry)
    rem = out.pop()
    assert rem == 0, "deflation by a non-root"
    return list(reversed(out))


def rational_roots(coeffs: Sequence[Fraction]) -> tuple[list[tuple[Fraction, int]], int]:
    """Rational roots with multiplicity, plus the leftover degree.

    Input is a coefficient list [c0, ..., cn].  Candidate roots come
    from the rational root theorem after clearing denominators; each
    confirmed root is divided out to full multiplicity.  The second
    return value is the degree of the rational-root-free cofactor, so a
    0 means the polynomial splits over Q.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("rational_roots undefined for the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    # strip t^k factor first: roots at zero
    zero_mult = 0
    while coeffs[0] == 0:
        zero_mult += 1
        coeffs = coeffs[1:]
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    while len(coeffs) > 1:
        if coeffs[0] == 0:
            # zero root reappearing after deflation
            coeffs = coeffs[1:]
            _bump(roots, Fraction(0))
            continue
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        ints = [int(c * scale) for c in coeffs]
        lead, const = ints[-1], ints[0]
        found = None
        for q in _divisors(lead):
            for p in _divisors(const):
                for sign in (1, -1):
                    cand = Fraction(sign * p, q)
                    if poly_eval(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        coeffs = _deflate(coeffs, found)
        _bump(roots, found)
    leftover = len(coeffs) - 1
    roots.sort(key=lambda rm: rm[0])
    return roots, leftover


def _bump(roots: list[tuple[Fraction, int]], value: Fraction) -> None:
    for i, (r, m) in enumerate(roots):
        if r == value:
            roots[i] = (r, m + 1)
            return
    roots.append((value, 1))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
