"""Exact truncated power series in several variables, their symmetrization and
the rewrite into elementary symmetric polynomials."""

from ._core import (
    DimensionMismatch,
    ElementarySeries,
    Error,
    NumericalBreakdown,
    ParseError,
    PreconditionError,
    Series,
    blaschke_eval,
    canonical,
    compare_composition,
    contraction_homotopy,
    corona_delta,
    delta_from_solution,
    elementary_values,
    factor_constant_sl,
    homotopy_residuals,
    orbit,
    paper_example,
    quotient_dist,
    separating_elementary,
    symmetrize_solution,
    verify_bezout,
)

__all__ = [
    "DimensionMismatch",
    "ElementarySeries",
    "Error",
    "NumericalBreakdown",
    "ParseError",
    "PreconditionError",
    "Series",
    "blaschke_eval",
    "canonical",
    "compare_composition",
    "contraction_homotopy",
    "corona_delta",
    "delta_from_solution",
    "elementary_values",
    "factor_constant_sl",
    "homotopy_residuals",
    "orbit",
    "paper_example",
    "quotient_dist",
    "separating_elementary",
    "symmetrize_solution",
    "verify_bezout",
]
