"""Tests for the named algebras and matrix-span closures."""
from __future__ import annotations

import random
from fractions import Fraction

from liecharpoly.charpoly import adjoint_rep, char_poly, rep_validate
from liecharpoly.constructions import (
    abelian,
    heisenberg,
    l5,
    m1_10,
    matrix_span_closure,
    n2_5,
    nilpotent5,
    nilpotent5_iso_images,
    random_strictly_upper,
    random_upper,
    two_dim_nonabelian,
)
from liecharpoly.liecore import bracket, classify_oracle, validate
from liecharpoly.ratmat import mat_vec, rank, transpose, vec


def test_named_algebras_validate():
    for L in (m1_10(), l5(), nilpotent5(), n2_5(), heisenberg(), abelian(4),
              two_dim_nonabelian()):
        assert validate(L).ok


def test_named_algebra_dimensions():
    assert m1_10().dim == 4
    assert l5().dim == 5
    assert nilpotent5().dim == 5
    assert n2_5().dim == 5


def test_nilpotent5_sample_brackets():
    L = nilpotent5()
    e = lambda i: vec([1 if k == i else 0 for k in range(5)])
    assert bracket(L, e(0), e(1)) == vec([1, 1, 1, -1, -1])
    assert bracket(L, e(3), e(4)) == vec([1, 0, -2, 0, -1])


def test_iso_images_define_an_isomorphism():
    source = n2_5()
    target = nilpotent5()
    images = nilpotent5_iso_images()
    assert rank(images) == 5
    # phi([xi, xj]) == [phi(xi), phi(xj)] for all pairs; images[i] holds
    # the coordinates of the image of x_{i+1}.
    for i in range(5):
        for j in range(i + 1, 5):
            lhs = mat_vec(transpose(images), source.pair_bracket(i, j))
            rhs = bracket(target, images[i], images[j])
            assert lhs == rhs


def test_matrix_span_closure_heisenberg_like():
    # x = E12, y = E23 generate a Heisenberg triple inside gl3.
    x = [[Fraction(v) for v in row] for row in ((0, 1, 0), (0, 0, 0), (0, 0, 0))]
    y = [[Fraction(v) for v in row] for row in ((0, 0, 0), (0, 0, 1), (0, 0, 0))]
    L, rep = matrix_span_closure([x, y])
    assert L.dim == 3
    assert validate(L).ok
    assert rep_validate(L, rep).ok
    assert classify_oracle(L).nilpotent


def test_matrix_span_closure_is_deterministic():
    rng1 = random.Random(11)
    rng2 = random.Random(11)
    seeds1 = random_upper(3, rng1, count=2)
    seeds2 = random_upper(3, rng2, count=2)
    assert seeds1 == seeds2
    L1, _ = matrix_span_closure(seeds1)
    L2, _ = matrix_span_closure(seeds2)
    assert L1 == L2


def test_strictly_upper_closures_are_nilpotent():
    rng = random.Random(3)
    for _ in range(5):
        seeds = random_strictly_upper(4, rng, count=2)
        L, rep = matrix_span_closure(seeds)
        if L.dim == 0:
            continue
        assert validate(L).ok
        assert rep_validate(L, rep).ok
        assert classify_oracle(L).nilpotent
        assert char_poly(adjoint_rep(L)).poly.to_text() == f"z0^{L.dim}"


def test_upper_closures_are_solvable():
    rng = random.Random(5)
    for _ in range(5):
        seeds = random_upper(3, rng, count=2)
        L, rep = matrix_span_closure(seeds)
        if L.dim == 0:
            continue
        assert validate(L).ok
        assert rep_validate(L, rep).ok
        assert classify_oracle(L).solvable
