"""Exact mean, variance and covariance polynomials of subgraph counts in G(n, 1/2).

Polynomials are lists of ``fractions.Fraction``; entry ``i`` multiplies ``n**i``.
"""

from ._core import (
    MomentReport,
    OracleCapExceeded,
    Pattern,
    PatternError,
    PatternTooLarge,
    automorphism_count,
    builtin_names,
    count_subgraphs,
    covariance,
    evaluate,
    exact_moments,
    format_decimal,
    format_sqrt_decimal,
    mean,
    render_human,
    run_cli,
    second_moment,
    to_matrix,
    variance,
    verify,
)

__all__ = [
    "MomentReport",
    "OracleCapExceeded",
    "Pattern",
    "PatternError",
    "PatternTooLarge",
    "automorphism_count",
    "builtin",
    "builtin_names",
    "count_subgraphs",
    "covariance",
    "evaluate",
    "exact_moments",
    "format_decimal",
    "format_sqrt_decimal",
    "mean",
    "render_human",
    "run_cli",
    "second_moment",
    "to_matrix",
    "variance",
    "verify",
]


def builtin(name):
    """Shorthand for ``Pattern.builtin(name)``."""
    return Pattern.builtin(name)
