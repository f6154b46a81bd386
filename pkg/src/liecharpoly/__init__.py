"""Exact characteristic polynomials of Lie algebra representations."""

from .charpoly import (
    CharPolyResult,
    ConsistencyError,
    Representation,
    adjoint_rep,
    char_poly,
    codim_factor_check,
    direct_sum,
    dual_identity,
    kernel_reduction,
    nilpotency_tests,
    power_linear_test,
    rep_validate,
    solvability_test,
)
from .exactpoly import (
    FactorizationResult,
    LinearForm,
    MultiPoly,
    RingMismatchError,
    ShapeError,
    apply_linear_change,
    determinant,
    determinant_cofactor,
    exact_divide,
    linear_factorization,
    parse_poly,
    structure_checks,
)
from .liecore import (
    AlgebraFormatError,
    LieAlgebra,
    ad_matrix,
    bracket,
    center,
    change_basis,
    classify_oracle,
    make_algebra,
    parse_algebra,
    render_algebra,
    series,
    validate,
)
from .typea import (
    CharacterElt,
    LinearizedPoly,
    NotSplitError,
    linearize_from_character,
    linearize_full,
    partition_from_dominant,
    resolution_product,
    sl2_closed_form,
    sl2_irrep_rep,
    sln_canonical_basis,
    tensor_character,
    weight_multiplicities,
    weyl_invariance_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFormatError",
    "CharPolyResult",
    "CharacterElt",
    "ConsistencyError",
    "FactorizationResult",
    "LieAlgebra",
    "LinearForm",
    "LinearizedPoly",
    "MultiPoly",
    "NotSplitError",
    "Representation",
    "RingMismatchError",
    "ShapeError",
    "ad_matrix",
    "adjoint_rep",
    "apply_linear_change",
    "bracket",
    "center",
    "change_basis",
    "char_poly",
    "classify_oracle",
    "codim_factor_check",
    "determinant",
    "determinant_cofactor",
    "direct_sum",
    "dual_identity",
    "exact_divide",
    "kernel_reduction",
    "linear_factorization",
    "linearize_from_character",
    "linearize_full",
    "make_algebra",
    "nilpotency_tests",
    "parse_algebra",
    "parse_poly",
    "partition_from_dominant",
    "power_linear_test",
    "rep_validate",
    "render_algebra",
    "resolution_product",
    "series",
    "sl2_closed_form",
    "sl2_irrep_rep",
    "sln_canonical_basis",
    "solvability_test",
    "structure_checks",
    "tensor_character",
    "validate",
    "weight_multiplicities",
    "weyl_invariance_check",
]
