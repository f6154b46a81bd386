"""Tests for the exact sparse multivariate polynomial layer."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecharpoly.exactpoly import (
    LinearForm,
    MultiPoly,
    RingMismatchError,
    ShapeError,
    apply_linear_change,
    determinant,
    determinant_cofactor,
    exact_divide,
    linear_factorization,
    pad_vars,
    parse_poly,
    specialize_tail_zero,
    structure_checks,
)
from liecharpoly.ratmat import identity, inverse, mat

M1_10_TEXT = "z0^4 + 2*z0^3*z3 + z0^2*z3^2 - z0^2*z4^2"


def P(text: str, num_vars: int | None = None) -> MultiPoly:
    return parse_poly(text, num_vars)


# ---------------------------------------------------------------------------
# Hypothesis strategies
# ---------------------------------------------------------------------------

NUM_VARS = 3

coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
).filter(lambda f: f != 0)
monomials = st.tuples(*([st.integers(min_value=0, max_value=3)] * NUM_VARS))


@st.composite
def polys(draw) -> MultiPoly:
    terms = draw(st.dictionaries(monomials, coeffs, max_size=4))
    return MultiPoly(NUM_VARS, terms)


@st.composite
def linear_entries(draw) -> MultiPoly:
    """Degree-<=1 polynomials, the shape of charpoly matrix entries."""
    c0 = draw(st.integers(min_value=-2, max_value=2))
    c1 = draw(st.integers(min_value=-2, max_value=2))
    c2 = draw(st.integers(min_value=-2, max_value=2))
    const = draw(st.integers(min_value=-2, max_value=2))
    p = MultiPoly.constant(NUM_VARS, const)
    for i, c in enumerate((c0, c1, c2)):
        p = p + MultiPoly.variable(NUM_VARS, i) * MultiPoly.constant(NUM_VARS, c)
    return p


# ---------------------------------------------------------------------------
# Construction and canonical text
# ---------------------------------------------------------------------------


def test_zero_coefficients_are_dropped():
    p = MultiPoly(2, {(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert p.terms == {(0, 1): Fraction(2)}


def test_wrong_monomial_length_rejected():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1, 0, 0): Fraction(1)})


def test_canonical_text_round_trip():
    p = P(M1_10_TEXT)
    assert p.num_vars == 5
    assert p.to_text() == M1_10_TEXT
    assert MultiPoly.parse(p.to_text()) == p


def test_to_text_graded_lex_order():
    p = P("z1^2 + z0*z1 + z0 - 1", 2)
    assert p.to_text() == "z0*z1 + z1^2 + z0 - 1"


def test_to_text_fractions_and_signs():
    p = MultiPoly(2, {(1, 0): Fraction(-1, 2), (0, 0): Fraction(3)})
    assert p.to_text() == "-1/2*z0 + 3"
    assert parse_poly(p.to_text(), 2) == p


def test_parse_zero():
    assert parse_poly("0", 2) == MultiPoly.zero(2)
    assert MultiPoly.zero(2).to_text() == "0"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("z0 + q1")
    with pytest.raises(ValueError):
        parse_poly("")
    with pytest.raises(ValueError):
        parse_poly("z0 + -")


def test_parse_respects_declared_ring_size():
    with pytest.raises(RingMismatchError):
        parse_poly("z5", num_vars=3)


def test_evaluate():
    p = P("z0^2 - z1*z2", 3)
    assert p.evaluate([2, 1, 3]) == Fraction(1)
    assert p.evaluate([Fraction(1, 2), 0, 5]) == Fraction(1, 4)


def test_immutability():
    p = MultiPoly.one(2)
    with pytest.raises(AttributeError):
        p.num_vars = 3


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------


def test_difference_of_squares():
    z0, z1 = (MultiPoly.variable(2, i) for i in range(2))
    assert (z0 + z1) * (z0 - z1) == z0 * z0 - z1 * z1


def test_additive_identity():
    p = P("z0^2 - 3*z1", 2)
    assert p + MultiPoly.zero(2) == p


def test_factored_quartic_expansion():
    z0, z3, z4 = (MultiPoly.variable(5, i) for i in (0, 3, 4))
    product = z0 * z0 * (z0 + z3 + z4) * (z0 + z3 - z4)
    assert product == P(M1_10_TEXT)


def test_pow_matches_repeated_multiplication():
    p = P("z0 + 2*z1", 2)
    assert p**0 == MultiPoly.one(2)
    assert p**3 == p * p * p


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        MultiPoly.one(2) + MultiPoly.one(3)


@given(polys(), polys())
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys(), polys(), polys())
def test_addition_associates(p, q, r):
    assert (p + q) + r == p + (q + r)


@given(polys(), polys())
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@given(polys(), polys(), polys())
def test_multiplication_associates(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(polys(), polys(), polys())
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys(), polys())
def test_subtraction_inverts_addition(p, q):
    assert (p + q) - q == p


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------


def test_determinant_diagonal():
    z0 = MultiPoly.variable(1, 0)
    zero = MultiPoly.zero(1)
    m = [[z0 if i == j else zero for j in range(4)] for i in range(4)]
    assert determinant(m) == z0**4


def test_determinant_2x2():
    z0, z1, z2 = (MultiPoly.variable(3, i) for i in range(3))
    m = [[z0, z1], [z2, z0]]
    assert determinant(m) == z0 * z0 - z1 * z2


def test_determinant_rejects_non_square():
    z0 = MultiPoly.variable(1, 0)
    with pytest.raises(ShapeError):
        determinant([[z0, z0]])


def test_determinant_zero_column():
    zero = MultiPoly.zero(1)
    one = MultiPoly.one(1)
    assert determinant([[zero, one], [zero, one]]) == zero


def test_determinant_row_swap_sign():
    z0, z1, z2 = (MultiPoly.variable(3, i) for i in range(3))
    m = [[z0, z1], [z2, z0]]
    swapped = [m[1], m[0]]
    assert determinant(swapped) == -determinant(m)


@given(st.integers(min_value=1, max_value=4), st.data())
def test_determinant_matches_cofactor_oracle(n, data):
    m = [[data.draw(linear_entries()) for _ in range(n)] for _ in range(n)]
    assert determinant(m) == determinant_cofactor(m)


# ---------------------------------------------------------------------------
# Linear change of variables
# ---------------------------------------------------------------------------


def test_apply_identity_change():
    p = P(M1_10_TEXT)
    assert apply_linear_change(p, identity(5)) == p


def test_apply_scaling_change():
    p = P("z0 + z1", 2)
    d = mat([[1, 0], [0, 2]])
    assert apply_linear_change(p, d) == P("z0 + 2*z1", 2)


def test_apply_change_round_trip():
    p = P("z0^2*z2 - 3*z1^3 + z0*z1*z2", 3)
    d = mat([[1, 0, 0], [2, 1, 1], [0, -1, 1]])
    there = apply_linear_change(p, d)
    assert apply_linear_change(there, inverse(d)) == p


def test_apply_change_shape_mismatch():
    with pytest.raises(ShapeError):
        apply_linear_change(P("z0 + z1", 2), identity(3))


def test_pad_and_specialize():
    p = P("z0^2 - z1*z2", 3)
    padded = pad_vars(p, 5)
    assert padded.num_vars == 5
    assert specialize_tail_zero(padded, 3) == p
    assert specialize_tail_zero(p, 2) == P("z0^2", 2)


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def test_divide_difference_of_squares():
    assert exact_divide(P("z0^2 - z1^2", 2), P("z0 - z1", 2)) == P("z0 + z1", 2)


def test_divide_out_z0_square():
    quotient = exact_divide(P(M1_10_TEXT), P("z0^2", 5))
    assert quotient == P("z0^2 + 2*z0*z3 + z3^2 - z4^2", 5)


def test_divide_constant_obstruction():
    assert exact_divide(P("z0 + z1", 2), P("z1", 2)) is None


def test_divide_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        exact_divide(P("z0", 1), MultiPoly.zero(1))


@given(polys(), polys())
def test_quotient_times_divisor_is_product(q, d):
    if d.is_zero():
        return
    assert exact_divide(q * d, d) == q


# ---------------------------------------------------------------------------
# Structure checks
# ---------------------------------------------------------------------------


def test_structure_of_quartic():
    summary = structure_checks(P(M1_10_TEXT))
    assert summary.homogeneous_degree == 4
    assert summary.z0_multiplicity == 2


def test_structure_of_quintic():
    p = P("z0^2", 6) * (P("z0 - z5", 6)) * P("z0^2 + 4*z1*z3 - z2^2", 6)
    summary = structure_checks(p)
    assert summary.homogeneous_degree == 5
    assert summary.z0_multiplicity == 2


def test_structure_mixed_degrees():
    summary = structure_checks(P("z0 + z1 + 1", 2))
    assert summary.homogeneous_degree is None
    assert summary.z0_multiplicity == 0


def test_structure_rejects_zero():
    with pytest.raises(ValueError):
        structure_checks(MultiPoly.zero(2))


# ---------------------------------------------------------------------------
# Linear factorization
# ---------------------------------------------------------------------------


def F(*coeffs: int) -> LinearForm:
    return LinearForm(tuple(Fraction(c) for c in coeffs))


def test_factor_quartic_completely():
    candidates = [F(0, 0, 0, 0), F(0, 0, 1, 1), F(0, 0, 1, -1)]
    result = linear_factorization(P(M1_10_TEXT), candidates)
    assert result.complete
    assert dict(result.factors) == {F(0, 0, 0, 0): 2, F(0, 0, 1, 1): 1, F(0, 0, 1, -1): 1}
    assert result.rebuild() == P(M1_10_TEXT)
    assert result.factor_text() == "(z0+z3+z4)^1*(z0+z3-z4)^1*(z0)^2"


def test_factor_pure_power():
    result = linear_factorization(P("z0^3", 1), [F()])
    assert result.complete
    assert dict(result.factors) == {F(): 3}


def test_factor_incomplete_residual():
    p = P("z0", 3) * P("z0^2 - 2*z1^2 + z2^2", 3)
    result = linear_factorization(p, [F(0, 0)])
    assert not result.complete
    assert result.residual == P("z0^2 - 2*z1^2 + z2^2", 3)
    assert result.rebuild() == p


def test_factor_requires_homogeneous_monic():
    with pytest.raises(ValueError):
        linear_factorization(P("z0 + 1", 1), [F()])
    with pytest.raises(ValueError):
        linear_factorization(P("2*z0^2", 1), [F()])


def test_linear_form_text_and_poly():
    form = F(1, -2)
    assert form.to_text() == "z0+z1-2*z2"
    assert form.to_poly() == P("z0 + z1 - 2*z2", 3)
