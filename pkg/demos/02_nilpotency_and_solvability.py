"""Reading nilpotency and solvability off the characteristic polynomial.

Two structural results drive this script.  First, a Lie algebra L is
nilpotent exactly when the characteristic polynomial of its adjoint
representation collapses to z0^dim L; an equivalent formulation sets
z0 = 1 and asks whether det(I + sum z_i ad_{e_i}) is identically 1.
Second, factorization into linear forms over Q detects solvability:
for a solvable algebra whose adjoint eigenvalues are rational, the
polynomial splits completely, while a non-solvable algebra always
leaves a nonlinear residual factor.

Run from the repository root:

    python3 demos/02_nilpotency_and_solvability.py
"""
from __future__ import annotations

from liecharpoly.charpoly import adjoint_rep, char_poly, codim_factor_check, nilpotency_tests, solvability_test
from liecharpoly.constructions import heisenberg, l5, nilpotent5, two_dim_nonabelian
from liecharpoly.liecore import classify_oracle


def report(name, L) -> None:
    poly = char_poly(adjoint_rep(L)).poly
    verdicts = nilpotency_tests(L)
    oracle = classify_oracle(L)
    solvability = solvability_test(L, adjoint_rep(L))
    codim = codim_factor_check(L)
    print(f"{name} (dim {L.dim})")
    print("    p_ad                =", poly.to_text())
    print("    nilpotent (theorem) =", verdicts.theorem_verdict)
    print("    nilpotent (det=1)   =", verdicts.corollary_verdict)
    print("    nilpotent (series)  =", oracle.nilpotent)
    print("    solvable (series)   =", oracle.solvable)
    print("    grid outcome        =", solvability.outcome)
    if not solvability.factorization.complete:
        print("    residual factor     =", solvability.factorization.residual.to_text())
    print(f"    z0-multiplicity {codim.z0_multiplicity} >= codim [L,L] = {codim.codim}:",
          codim.holds)
    print()


def main() -> None:
    print("The characteristic polynomial of the adjoint representation")
    print("detects nilpotency exactly, and solvability whenever the")
    print("adjoint spectrum is rational.  Four examples:")
    print()

    report("Heisenberg algebra", heisenberg())
    report("5-dim nilpotent algebra", nilpotent5())
    report("2-dim nonabelian algebra", two_dim_nonabelian())
    report("5-dim algebra with an sl2 part", l5())

    print("The last algebra is not solvable, and the grid factorization")
    print("over its rational eigenvalues stops at a quadratic residual --")
    print("exactly the certificate the outcome field reports.")


if __name__ == "__main__":
    main()
