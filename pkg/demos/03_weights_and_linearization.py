"""Weight multiplicities, linearized polynomials, and tensor products.

For sl_n acting on an irreducible representation, the characteristic
polynomial restricted to the Cartan directions splits into linear
factors indexed by the weights of the representation, with exponents
given by weight multiplicities.  This script builds those factorizations
combinatorially (from semistandard tableaux), compares them with the
polynomial route (expand the determinant, then strip linear factors),
and shows that the resolution product of two factorizations matches the
tensor-product character.

Run from the repository root:

    python3 demos/03_weights_and_linearization.py
"""
from __future__ import annotations

from liecharpoly.charpoly import adjoint_rep, char_poly
from liecharpoly.typea import (
    linearize_from_character,
    linearize_full,
    resolution_product,
    sln_canonical_basis,
    tensor_character,
    weight_multiplicities,
    weyl_invariance_check,
)


def main() -> None:
    print("sl2: tensor square of the defining representation")
    print()
    ch = weight_multiplicities((1,), 2)
    lin = linearize_from_character(ch)
    print("    defining rep factorization :", lin.to_text())
    square = resolution_product(lin, lin)
    print("    resolution product         :", square.to_text())
    tensor = linearize_from_character(tensor_character(ch, ch))
    print("    tensor character route     :", tensor.to_text())
    print("    the two routes agree       :", square == tensor)
    print()

    print("sl3: the adjoint representation, two independent ways")
    print()
    data = sln_canonical_basis(3)
    poly = char_poly(adjoint_rep(data.algebra)).poly
    via_poly = linearize_full(poly, len(data.cartan))
    print("    determinant route          :", via_poly.to_text())
    via_tableaux = linearize_from_character(weight_multiplicities((2, 1), 3))
    print("    tableau route              :", via_tableaux.to_text())
    print("    the two routes agree       :", via_poly == via_tableaux)
    print()

    print("Each factorization is stable under permuting the underlying")
    print("eps-coordinates; the Weyl invariance check certifies that:")
    print()
    print("    sl2 tensor square invariant:", weyl_invariance_check(square, 2))
    print("    sl3 adjoint invariant      :", weyl_invariance_check(via_poly, 3))


if __name__ == "__main__":
    main()
