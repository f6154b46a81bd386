"""Tests for Lie algebra structure constants, series, and the text format."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecharpoly.constructions import (
    abelian,
    heisenberg,
    l5,
    m1_10,
    n2_5,
    nilpotent5,
    two_dim_nonabelian,
)
from liecharpoly.liecore import (
    AlgebraFormatError,
    Classification,
    ad_basis,
    ad_matrix,
    bracket,
    center,
    change_basis,
    classify_oracle,
    derived_subalgebra,
    make_algebra,
    parse_algebra,
    render_algebra,
    series,
    validate,
)
from liecharpoly.ratmat import identity, inverse, mat, mat_vec, vec
from liecharpoly.typea import sl2_algebra


def unit(dim: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def test_make_algebra_rejects_bad_shapes():
    with pytest.raises(ValueError):
        make_algebra(2, [(0, 0, {1: 1})])  # i == j
    with pytest.raises(ValueError):
        make_algebra(2, [(1, 0, {1: 1})])  # i > j
    with pytest.raises(ValueError):
        make_algebra(2, [(0, 3, {1: 1})])  # out of range


def test_validate_sl2_ok():
    assert validate(sl2_algebra()).ok


def test_validate_detects_jacobi_failure():
    bad = make_algebra(3, [(0, 1, {1: 2}), (0, 2, {2: -2}), (1, 2, {0: 1, 1: 1})],
                       ["h", "e", "f"])
    report = validate(bad)
    assert not report.ok
    assert report.violations == ((0, 1, 2),)
    assert report.describe(bad) == "Jacobi identity fails at (h,e,f)"


def test_validate_abelian_ok():
    assert validate(abelian(4)).ok


# ---------------------------------------------------------------------------
# Brackets and adjoint matrices
# ---------------------------------------------------------------------------


def test_bracket_e4_e1():
    L = m1_10()
    assert bracket(L, unit(4, 3), unit(4, 0)) == unit(4, 1)
    assert bracket(L, unit(4, 3), unit(4, 1)) == unit(4, 0)


def test_bracket_alternating():
    L = m1_10()
    x = vec([1, -2, 3, 5])
    assert bracket(L, x, x) == vec([0, 0, 0, 0])


def test_bracket_bilinear_combination():
    L = m1_10()
    x = vec([1, 1, 0, 0])
    assert bracket(L, x, unit(4, 2)) == vec([-1, -1, 0, 0])


def test_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        bracket(m1_10(), [1, 0], [0, 1])


def test_ad_e1_matrix():
    expected = mat([[0, 0, -1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert ad_matrix(m1_10(), unit(4, 0)) == expected


def test_ad_abelian_is_zero():
    L = abelian(3)
    assert ad_matrix(L, vec([1, 2, 3])) == mat([[0] * 3] * 3)


def test_ad_is_linear():
    L = m1_10()
    lhs = ad_matrix(L, vec([1, 1, 0, 0]))
    expected = mat([[0, 0, -1, -1], [0, 0, -1, -1], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert lhs == expected


@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=5, max_size=5),
       st.lists(st.integers(min_value=-3, max_value=3), min_size=5, max_size=5))
def test_ad_matrix_acts_as_bracket(xs, ys):
    L = nilpotent5()
    x = vec(xs)
    y = vec(ys)
    assert mat_vec(ad_matrix(L, x), y) == bracket(L, x, y)


def test_ad_basis_order():
    L = heisenberg()
    mats = ad_basis(L)
    assert mats[0] == ad_matrix(L, unit(3, 0))
    assert len(mats) == 3


# ---------------------------------------------------------------------------
# Series, classification, center
# ---------------------------------------------------------------------------


def test_heisenberg_lower_central_chain():
    chain = series(heisenberg(), "lower_central")
    assert chain.dims() == [3, 1, 0]
    assert chain.terminates_at_zero()
    assert chain.bases[1] == ((Fraction(0), Fraction(0), Fraction(1)),)


def test_abelian_derived_chain():
    chain = series(abelian(3), "derived")
    assert chain.dims() == [3, 0]
    assert chain.terminates_at_zero()


def test_l5_derived_series_stabilizes_nonzero():
    chain = series(l5(), "derived")
    assert chain.dims() == [5, 4, 3]
    assert not chain.terminates_at_zero()


def test_m1_10_series():
    L = m1_10()
    assert series(L, "derived").dims() == [4, 2, 0]
    assert series(L, "lower_central").dims() == [4, 2]


def test_series_kind_checked():
    with pytest.raises(ValueError):
        series(abelian(2), "upper_central")


def test_classify_fixtures():
    assert classify_oracle(l5()) == Classification(False, False)
    assert classify_oracle(m1_10()).solvable
    assert not classify_oracle(m1_10()).nilpotent
    assert classify_oracle(nilpotent5()).nilpotent
    assert classify_oracle(n2_5()).nilpotent
    assert classify_oracle(two_dim_nonabelian()).solvable
    assert not classify_oracle(two_dim_nonabelian()).nilpotent
    assert not classify_oracle(sl2_algebra()).solvable


def test_derived_subalgebra_m1_10():
    basis = derived_subalgebra(m1_10())
    assert basis == [vec([1, 0, 0, 0]), vec([0, 1, 0, 0])]


def test_center_heisenberg():
    assert center(heisenberg()) == [vec([0, 0, 1])]


def test_center_abelian_and_sl2():
    assert len(center(abelian(3))) == 3
    assert center(sl2_algebra()) == []


def test_center_elements_have_zero_ad():
    L = nilpotent5()
    for x in center(L):
        assert ad_matrix(L, x) == mat([[0] * 5] * 5)


# ---------------------------------------------------------------------------
# Change of basis
# ---------------------------------------------------------------------------


def test_change_basis_identity():
    L = m1_10()
    assert change_basis(L, identity(4), L.basis_names) == L


def test_change_basis_round_trip():
    L = m1_10()
    p = mat([[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
    there = change_basis(L, p)
    assert change_basis(there, inverse(p), L.basis_names) == L


def test_change_basis_scaling_rescales_constants():
    L = heisenberg()
    p = mat([[1, 0, 0], [0, 2, 0], [0, 0, 1]])
    scaled = change_basis(L, p)
    # New basis (e1, 2e2, e3): [e1, 2e2] = 2e3.
    assert scaled.pair_bracket(0, 1) == vec([0, 0, 2])


def test_change_basis_preserves_classification():
    L = m1_10()
    p = mat([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    assert classify_oracle(change_basis(L, p)) == classify_oracle(L)


def test_change_basis_rejects_singular():
    with pytest.raises(ValueError):
        change_basis(heisenberg(), mat([[1, 1, 0], [1, 1, 0], [0, 0, 1]]))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

HEISENBERG_TEXT = """\
# three generators, one central
dim 3
basis e1 e2 e3
bracket [1, 2, [3:1]]
"""


def test_parse_algebra_basic():
    L = parse_algebra(HEISENBERG_TEXT)
    assert L == heisenberg()


def test_parse_algebra_defaults_names():
    L = parse_algebra("dim 2\nbracket [1, 2, [2:1]]\n")
    assert L.basis_names == ("e1", "e2")


def test_render_parse_round_trip():
    for L in (m1_10(), l5(), nilpotent5(), n2_5(), heisenberg(), abelian(2)):
        assert parse_algebra(render_algebra(L)) == L


def test_render_includes_header_comment():
    text = render_algebra(heisenberg(), "demo algebra")
    assert text.splitlines()[0] == "# demo algebra"
    assert parse_algebra(text) == heisenberg()


def test_parse_error_codes():
    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\nbracket [2, 1, [1:1]]\n")
    assert err.value.code == "index-order"

    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\nbracket [1, 3, [1:1]]\n")
    assert err.value.code == "range"

    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\nbracket [1, 2, [3:1]]\n")
    assert err.value.code == "range"

    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\nbracket [1, 2, oops]\n")
    assert err.value.code == "syntax"

    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("basis a b\ndim 2\n")
    assert err.value.code == "syntax"

    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 3\nbracket [1, 2, [2:2]]\nbracket [1, 3, [3:-2]]\n"
                      "bracket [2, 3, [1:1, 2:1]]\n")
    assert err.value.code == "jacobi"


def test_parse_duplicate_bracket_rejected():
    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\nbracket [1, 2, [2:1]]\nbracket [1, 2, [2:1]]\n")
    assert err.value.code == "syntax"


def test_parse_error_carries_line_number():
    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra("dim 2\n\nbracket [2, 1, [1:1]]\n")
    assert err.value.line_no == 3
