"""Tests for the exact rational linear algebra helpers."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecharpoly.ratmat import (
    char_poly_coeffs,
    extend_to_basis,
    identity,
    in_span,
    inverse,
    kernel,
    mat,
    mat_mul,
    mat_vec,
    poly_eval,
    rank,
    rational_roots,
    rref,
    same_span,
    solve,
    span_basis,
    transpose,
    vec,
)

entries = st.integers(min_value=-5, max_value=5)


def test_rref_pivots_and_form():
    a = mat([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    r, pivots = rref(a)
    assert pivots == [0, 1]
    assert r == mat([[1, 0, -1], [0, 1, 2], [0, 0, 0]])


def test_rank():
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(identity(3)) == 3
    assert rank(mat([[0, 0], [0, 0]])) == 0


def test_kernel_of_projection():
    a = mat([[1, 0, -1], [0, 1, 2]])
    basis = kernel(a)
    assert basis == [vec([1, -2, 1])]
    assert mat_vec(a, basis[0]) == vec([0, 0])


def test_kernel_full_and_trivial():
    assert kernel(mat([[0, 0], [0, 0]])) == [vec([1, 0]), vec([0, 1])]
    assert kernel(identity(2)) == []


def test_inverse_round_trip():
    a = mat([[2, 1], [1, 1]])
    assert mat_mul(a, inverse(a)) == identity(2)
    with pytest.raises(ValueError):
        inverse(mat([[1, 2], [2, 4]]))


def test_solve_unique_and_inconsistent():
    a = mat([[1, 1], [0, 1]])
    assert solve(a, vec([3, 1])) == vec([2, 1])
    assert solve(mat([[1, 1], [1, 1]]), vec([0, 1])) is None


def test_solve_underdetermined_sets_free_vars_to_zero():
    a = mat([[1, 1, 0]])
    assert solve(a, vec([5])) == vec([5, 0, 0])


def test_span_helpers():
    vs = [vec([1, 1, 0]), vec([2, 2, 0]), vec([0, 0, 1])]
    basis = span_basis(vs, 3)
    assert len(basis) == 2
    assert in_span(vec([3, 3, 7]), basis)
    assert not in_span(vec([1, 0, 0]), basis)
    assert same_span(vs, basis, 3)


def test_extend_to_basis():
    partial = [vec([1, 1])]
    full = extend_to_basis(partial, 2)
    assert len(full) == 2
    assert full[0] == vec([1, 1])
    assert rank(full) == 2


def test_transpose():
    assert transpose(mat([[1, 2, 3], [4, 5, 6]])) == mat([[1, 4], [2, 5], [3, 6]])


def test_char_poly_of_companion():
    # t^2 - t - 1 for the Fibonacci companion matrix.
    coeffs = char_poly_coeffs(mat([[1, 1], [1, 0]]))
    assert coeffs == [Fraction(-1), Fraction(-1), Fraction(1)]


def test_char_poly_of_diagonal():
    coeffs = char_poly_coeffs(mat([[2, 0], [0, 3]]))
    # (t-2)(t-3) = t^2 - 5t + 6
    assert coeffs == [Fraction(6), Fraction(-5), Fraction(1)]
    assert poly_eval(coeffs, Fraction(2)) == 0
    assert poly_eval(coeffs, Fraction(3)) == 0


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3))
def test_char_poly_vanishes_on_eigenvalue_zero_iff_singular(rows):
    a = mat(rows)
    coeffs = char_poly_coeffs(a)
    # det(tI - A) at t=0 is (-1)^n det A, so constant term zero iff singular.
    assert (coeffs[0] == 0) == (rank(a) < 3)


def test_rational_roots_with_multiplicity():
    # (t-1)^2 (t+2) = t^3 - 3t + 2
    roots, leftover = rational_roots([Fraction(2), Fraction(-3), Fraction(0), Fraction(1)])
    assert roots == [(Fraction(-2), 1), (Fraction(1), 2)]
    assert leftover == 0


def test_rational_roots_zero_roots():
    # t^2 (t - 1/2)
    roots, leftover = rational_roots([Fraction(0), Fraction(0), Fraction(-1, 2), Fraction(1)])
    assert roots == [(Fraction(0), 2), (Fraction(1, 2), 1)]
    assert leftover == 0


def test_rational_roots_irrational_leftover():
    # t^2 - 2 has no rational roots.
    roots, leftover = rational_roots([Fraction(-2), Fraction(0), Fraction(1)])
    assert roots == []
    assert leftover == 2


def test_rational_roots_fractional_coefficients():
    # (t - 1/2)(t - 3) = t^2 - 7/2 t + 3/2
    roots, leftover = rational_roots([Fraction(3, 2), Fraction(-7, 2), Fraction(1)])
    assert roots == [(Fraction(1, 2), 1), (Fraction(3), 1)]
    assert leftover == 0
