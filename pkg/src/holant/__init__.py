"""Exact partition functions and the hardness toolkit around them.

The package evaluates Z(G) for complex edge weights (w, x, y, z) on directed
multigraphs, decides which side of the tractability dichotomy a weight tuple
falls on, runs the polynomial-time solvers for every tractable class, and
operationalizes the hardness machinery (gadget transition matrices,
anti-gadget products, projective gadget sets, interpolation through recursive
gadget families) as checkable computations.
"""

from .scalars import (
    FLOAT_TOLERANCE,
    QI,
    GaussianRational,
    ScalarParseError,
    Zeta8,
    conj,
    format_scalar,
    i_power,
    is_zero,
    parse_scalar,
    parse_signature_values,
    scalars_equal,
    to_complex,
)
from .linalg import DimensionMismatch, Matrix
from .grids import (
    BinarySignature,
    DirectedMultiGraph,
    GridFormatError,
    Signature,
    SignatureGrid,
    SizeGuardError,
    combine_gates,
    cycle_graph,
    dumps_graph,
    dumps_grid,
    eval_holant,
    eval_holant_by_elimination,
    eval_partition,
    gate_signature,
    join_gates,
    k4,
    k33,
    pendant_grid,
    random_3_regular,
    random_multigraph,
    rewire,
    splice_unary_gates,
    to_incidence_grid,
)
from .gadgets import (
    GADGET_ALIASES,
    GADGET_LIBRARY,
    FiniteOrderResult,
    GadgetExprError,
    GadgetSpec,
    anti_gadget_product,
    basic_component,
    char_poly_coefficients,
    eval_gadget_expr,
    finite_order_up_to_scalar,
    library_names,
    parse_gadget_expr,
    resolve_gadget,
    same_norm_necessary_condition,
    transition_matrix,
)
from .classify import (
    ClassificationReport,
    CitedHardness,
    HardnessWitness,
    WitnessError,
    check_symmetrization_invariance,
    classify,
    hardness_witness,
    matched_classes,
    verify_witness,
)
from .solvers import (
    AffineNormalForm,
    DispatchResult,
    QuadraticFormZ4,
    Rank1Factorization,
    SolverError,
    affine_normal_form,
    gauss_sum_quadratic_z4,
    solve_affine,
    solve_degenerate,
    solve_dispatch,
    solve_generalized_disequality,
    solve_generalized_equality,
)
from .interpolation import (
    FiniteGroupError,
    InterpolationError,
    InterpolationRun,
    ProjectiveSet,
    ProjectiveSetError,
    cayley_enumerate,
    group_lemma_interpolate,
    projective_case,
    projective_set_for,
    rank_preserving_member,
    vandermonde_solve,
)
from .formulas import (
    ANTI_GADGET_STATEMENTS,
    CHAR_POLY_STATEMENTS,
    DETERMINANT_STATEMENTS,
    MATRIX_STATEMENTS,
    signature_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "FLOAT_TOLERANCE",
    "GaussianRational",
    "QI",
    "ScalarParseError",
    "Zeta8",
    "conj",
    "format_scalar",
    "i_power",
    "is_zero",
    "parse_scalar",
    "parse_signature_values",
    "scalars_equal",
    "to_complex",
    "DimensionMismatch",
    "Matrix",
    "BinarySignature",
    "DirectedMultiGraph",
    "GridFormatError",
    "Signature",
    "SignatureGrid",
    "SizeGuardError",
    "combine_gates",
    "cycle_graph",
    "dumps_graph",
    "dumps_grid",
    "eval_holant",
    "eval_holant_by_elimination",
    "eval_partition",
    "gate_signature",
    "join_gates",
    "k4",
    "k33",
    "pendant_grid",
    "random_3_regular",
    "random_multigraph",
    "rewire",
    "splice_unary_gates",
    "to_incidence_grid",
    "GADGET_ALIASES",
    "GADGET_LIBRARY",
    "FiniteOrderResult",
    "GadgetExprError",
    "GadgetSpec",
    "anti_gadget_product",
    "basic_component",
    "char_poly_coefficients",
    "eval_gadget_expr",
    "finite_order_up_to_scalar",
    "library_names",
    "parse_gadget_expr",
    "resolve_gadget",
    "same_norm_necessary_condition",
    "transition_matrix",
    "ClassificationReport",
    "CitedHardness",
    "HardnessWitness",
    "WitnessError",
    "check_symmetrization_invariance",
    "classify",
    "hardness_witness",
    "matched_classes",
    "verify_witness",
    "AffineNormalForm",
    "DispatchResult",
    "QuadraticFormZ4",
    "Rank1Factorization",
    "SolverError",
    "affine_normal_form",
    "gauss_sum_quadratic_z4",
    "solve_affine",
    "solve_degenerate",
    "solve_dispatch",
    "solve_generalized_disequality",
    "solve_generalized_equality",
    "FiniteGroupError",
    "InterpolationError",
    "InterpolationRun",
    "ProjectiveSet",
    "ProjectiveSetError",
    "cayley_enumerate",
    "group_lemma_interpolate",
    "projective_case",
    "projective_set_for",
    "rank_preserving_member",
    "vandermonde_solve",
    "ANTI_GADGET_STATEMENTS",
    "CHAR_POLY_STATEMENTS",
    "DETERMINANT_STATEMENTS",
    "MATRIX_STATEMENTS",
    "signature_invariants",
]
