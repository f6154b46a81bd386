"""Characteristic polynomials of Lie algebra representations, step by step.

Walks through the central object of the library: for a representation
phi of a Lie algebra L with generators e_1..e_s acting by matrices
A_1..A_s on an n-dimensional space, the characteristic polynomial is

    p(z0, z1, ..., zs) = det(z0*I + z1*A_1 + ... + zs*A_s),

a homogeneous polynomial of degree n that is monic in z0.  The script
computes it for a 4-dimensional solvable algebra, factors it into
linear forms, and shows how it transforms under a change of basis.

Run from the repository root:

    python3 demos/01_charpoly_and_basis_change.py
"""
from __future__ import annotations

from liecharpoly.charpoly import adjoint_rep, char_poly, charpoly_matrix, solvability_test
from liecharpoly.constructions import m1_10
from liecharpoly.exactpoly import apply_linear_change
from liecharpoly.liecore import change_basis, render_algebra
from liecharpoly.ratmat import mat


def show_matrix(matrix) -> None:
    for row in matrix:
        print("   ", "  ".join(entry.to_text() or "0" for entry in row))


def main() -> None:
    L = m1_10()
    print("A 4-dimensional solvable Lie algebra, given by structure constants:")
    print()
    for line in render_algebra(L).splitlines():
        print("   ", line)
    print()

    rep = adjoint_rep(L)
    print("Its adjoint representation acts on L itself, so the symbolic")
    print("matrix z0*I + sum_i z_i ad_{e_i} is 4 x 4:")
    print()
    show_matrix(charpoly_matrix(rep))
    print()

    p1 = char_poly(rep).poly
    print("Fraction-free determinant (exact rational arithmetic):")
    print()
    print("    p =", p1.to_text())
    print()

    factorization = solvability_test(L, rep).factorization
    print("The algebra is solvable with rational adjoint eigenvalues, so")
    print("the polynomial splits into linear forms over Q:")
    print()
    print("    p =", factorization.factor_text())
    print()

    # New basis x1=e1+e2, x2=e2+e3, x3=e3+e4, x4=e4; columns of P are the
    # new basis vectors in the old coordinates.
    p_cols = mat([[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
    L2 = change_basis(L, p_cols)
    p2 = char_poly(adjoint_rep(L2)).poly
    print("Changing basis to x1=e1+e2, x2=e2+e3, x3=e3+e4, x4=e4 changes")
    print("the structure constants, and with them the polynomial:")
    print()
    print("    p' =", p2.to_text())
    print("       =", solvability_test(L2, adjoint_rep(L2)).factorization.factor_text())
    print()

    d = [[0] * 5 for _ in range(5)]
    d[0][0] = 1
    for r in range(4):
        for c in range(4):
            d[r + 1][c + 1] = p_cols[c][r]
    print("The two polynomials are related by the linear substitution")
    print("z |-> Dz with D = blockdiag(1, P^T): the substituted p equals p'.")
    print()
    print("    substitution matches:", apply_linear_change(p1, d) == p2)


if __name__ == "__main__":
    main()
