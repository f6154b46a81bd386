"""Ready-made algebras and matrix-closure constructions.

The named builders return the worked examples used throughout the test
suite: the 4-dimensional solvable algebra m1_10, the non-solvable
5-dimensional l5, a 5-dimensional nilpotent algebra with dense bracket
relations, the filiform-like n2_5 it is isomorphic to, plus Heisenberg,
abelian and the 2-dimensional non-abelian algebra.

matrix_span_closure turns any finite set of matrices into a genuine Lie
algebra: it closes the span under commutators and reads off structure
constants, returning the algebra together with its (tautologically
faithful) matrix representation.  Feeding it strictly upper triangular
seeds yields nilpotent algebras; upper triangular seeds yield solvable
algebras whose generator spectra are the rational diagonal entries.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import ratmat
from .charpoly import Representation
from .liecore import LieAlgebra, make_algebra
from .ratmat import Matrix


def m1_10() -> LieAlgebra:
    """4-dim solvable: [e4,e1]=e2, [e4,e2]=e1, [e3,e1]=e1, [e3,e2]=e2."""
    return make_algebra(
        4,
        [
            (0, 2, {0: -1}),
            (0, 3, {1: -1}),
            (1, 2, {1: -1}),
            (1, 3, {0: -1}),
        ],
    )


def l5() -> LieAlgebra:
    """5-dim non-solvable: [e1,e2]=e1, [e1,e3]=2e2, [e2,e3]=e3, [e4,e5]=e4."""
    return make_algebra(
        5,
        [
            (0, 1, {0: 1}),
            (0, 2, {1: 2}),
            (1, 2, {2: 1}),
            (3, 4, {3: 1}),
        ],
    )


def nilpotent5() -> LieAlgebra:
    """5-dim nilpotent algebra whose nilpotency is not obvious by eye."""
    return make_algebra(
        5,
        [
            (0, 1, {0: 1, 1: 1, 2: 1, 3: -1, 4: -1}),
            (0, 2, {1: -1, 2: -1, 3: 1}),
            (0, 3, {2: 1}),
            (0, 4, {1: 1, 2: 1, 3: -1}),
            (1, 2, {0: -1, 2: 1, 4: 1}),
            (1, 3, {0: -1, 2: 1, 4: 1}),
            (1, 4, {1: -1, 2: -2, 3: 1}),
            (2, 3, {0: 1, 2: -1, 4: -1}),
            (2, 4, {1: 1, 2: 1, 3: -1}),
            (3, 4, {0: 1, 2: -2, 4: -1}),
        ],
    )


def n2_5() -> LieAlgebra:
    """The nilpotent algebra n_2^5: [x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5, [x2,x3]=x5."""
    return make_algebra(
        5,
        [
            (0, 1, {2: 1}),
            (0, 2, {3: 1}),
            (0, 3, {4: 1}),
            (1, 2, {4: 1}),
        ],
        ("x1", "x2", "x3", "x4", "x5"),
    )


def nilpotent5_iso_images() -> Matrix:
    """Images of the n2_5 basis inside nilpotent5, one row per x_k."""
    return ratmat.mat(
        [
            [1, 0, -1, 0, 0],
            [0, 1, 1, 0, 0],
            [0, 0, 1, 0, 0],
            [0, -1, -1, 1, 0],
            [-1, 0, 1, 0, 1],
        ]
    )


def heisenberg() -> LieAlgebra:
    """3-dim Heisenberg algebra: [e1,e2]=e3."""
    return make_algebra(3, [(0, 1, {2: 1})])


def abelian(n: int) -> LieAlgebra:
    return make_algebra(n, [])


def two_dim_nonabelian() -> LieAlgebra:
    """The unique non-abelian 2-dim algebra: [e1,e2]=e2."""
    return make_algebra(2, [(0, 1, {1: 1})])


# ---------------------------------------------------------------------------
# Matrix span closure
# ---------------------------------------------------------------------------


def _vec(m: Matrix) -> list[Fraction]:
    return [x for row in m for x in row]


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return ratmat.mat_sub(ratmat.mat_mul(a, b), ratmat.mat_mul(b, a))


def matrix_span_closure(seeds: Sequence[Matrix]) -> tuple[LieAlgebra, Representation]:
    """Close the span of `seeds` under commutators; return algebra + rep.

    The basis starts with the independent seeds (in order) and grows by
    appending commutators that enlarge the span, scanning pairs in index
    order, so the construction is deterministic.  The representation
    maps basis element k to its own matrix and is a Lie homomorphism by
    construction.
    """
    if not seeds:
        raise ValueError("matrix_span_closure needs at least one seed matrix")
    n = len(seeds[0])
    basis: list[Matrix] = []
    rows: list[list[Fraction]] = []  # rref rows tracking the current span
    for m in seeds:
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("seed matrices must all be square of one size")
        _try_add(basis, rows, m)
    if not basis:
        raise ValueError("seed matrices span the zero space")
    i = 0
    while i < len(basis):
        for j in range(i):
            _try_add(basis, rows, _commutator(basis[j], basis[i]))
        i += 1
    dim = len(basis)
    flat = [[basis[k][r][c] for k in range(dim)] for r in range(n) for c in range(n)]
    table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            coords = ratmat.solve(flat, _vec(_commutator(basis[a], basis[b])))
            if coords is None:
                raise AssertionError("closure left a commutator outside the span")
            table[(a, b)] = tuple(coords)
    L = make_algebra(dim, table, tuple(f"m{k+1}" for k in range(dim)))
    return L, Representation(basis, n)


def _try_add(basis: list[Matrix], rows: list[list[Fraction]], m: Matrix) -> bool:
    v = _vec(m)
    if not any(v):
        return False
    current = ratmat.span_basis(rows, len(v)) if rows else []
    if ratmat.in_span(v, current):
        return False
    rows.append(v)
    basis.append([row[:] for row in m])
    return True


def random_strictly_upper(n: int, rng: random.Random, count: int = 2) -> list[Matrix]:
    """Random strictly upper triangular integer matrices (nilpotent seeds)."""
    out = []
    for _ in range(count):
        m = ratmat.zeros(n, n)
        for r in range(n):
            for c in range(r + 1, n):
                m[r][c] = Fraction(rng.randint(-2, 2))
        out.append(m)
    return out


def random_upper(n: int, rng: random.Random, count: int = 2) -> list[Matrix]:
    """Random upper triangular integer matrices (solvable seeds with
    rational spectra: the eigenvalues are the diagonal entries)."""
    out = []
    for _ in range(count):
        m = ratmat.zeros(n, n)
        for r in range(n):
            for c in range(r, n):
                m[r][c] = Fraction(rng.randint(-2, 2))
        out.append(m)
    return out
