"""Series coefficient prediction from Hermite-Pade polynomials."""

from ._core import (
    AlgserError,
    ApproximantValue,
    DegreeSpec,
    ErrorRow,
    PolynomialSet,
    PredictionState,
    build_system,
    compute_C,
    compute_DJ,
    eval_at,
    example,
    mul,
    oracle,
    poly_times_series,
    polynomial_roots,
    pow,
    predict_k,
    predict_next,
    predict_quadratic_fast,
    reference_errors,
    required_input_length,
    residual_RJ,
    roots_of_section,
    run_cli,
    solve_hpp,
    truncate,
    verify_order,
)

__all__ = [
    "AlgserError",
    "ApproximantValue",
    "DegreeSpec",
    "ErrorRow",
    "PolynomialSet",
    "PredictionState",
    "build_system",
    "compute_C",
    "compute_DJ",
    "eval_at",
    "example",
    "mul",
    "oracle",
    "poly_times_series",
    "polynomial_roots",
    "pow",
    "predict_k",
    "predict_next",
    "predict_quadratic_fast",
    "reference_errors",
    "required_input_length",
    "residual_RJ",
    "roots_of_section",
    "run_cli",
    "solve_hpp",
    "truncate",
    "verify_order",
]
