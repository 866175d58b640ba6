"""Symbolic solver for exact differential equations in n variables.

The heavy lifting lives in the compiled ``_core`` module; this package just
re-exports it.  Reports come back as plain dicts mirroring the CLI's JSON
output (see schema/report.schema.json in the source tree).
"""

from ._core import (
    DifferentialForm,
    DomainError,
    DuplicateVariableError,
    ExactformError,
    Expr,
    InsufficientSamplesError,
    NotExactError,
    NotIntegrableError,
    ParseError,
    QuadratureError,
    ResidualContaminationError,
    UnboundVariableError,
    VerificationError,
    __version__,
    canonical,
    canonically_equal,
    check_exact,
    cost_model_standard,
    derive_form,
    differentiate,
    equivalence,
    eval_numeric,
    format_expr,
    format_form,
    generate_potential,
    gradient_check,
    integrate,
    is_basic_type_one,
    is_basic_type_two,
    parse_expression,
    parse_form,
    path_independence_check,
    reconstruct_potential,
    round_trip,
    run_trials,
    solve_basic,
    solve_standard,
    term_multiplicity_diagnostic,
    verify_solution,
)

__all__ = [
    "DifferentialForm",
    "DomainError",
    "DuplicateVariableError",
    "ExactformError",
    "Expr",
    "InsufficientSamplesError",
    "NotExactError",
    "NotIntegrableError",
    "ParseError",
    "QuadratureError",
    "ResidualContaminationError",
    "UnboundVariableError",
    "VerificationError",
    "__version__",
    "canonical",
    "canonically_equal",
    "check_exact",
    "cost_model_standard",
    "derive_form",
    "differentiate",
    "equivalence",
    "eval_numeric",
    "format_expr",
    "format_form",
    "generate_potential",
    "gradient_check",
    "integrate",
    "is_basic_type_one",
    "is_basic_type_two",
    "parse_expression",
    "parse_form",
    "path_independence_check",
    "reconstruct_potential",
    "round_trip",
    "run_trials",
    "solve_basic",
    "solve_standard",
    "term_multiplicity_diagnostic",
    "verify_solution",
]
