"""Certified numeric enclosures for convex functions.

Thin wrapper over the compiled core: parse a univariate expression, certify
the convexity hypothesis an inequality needs, and return two-sided numeric
brackets for integral means, series, moments and weighted-norm ratios.
"""

from ._core import (
    BoundPair,
    ConvexityCertificate,
    ConvexityError,
    DomainError,
    Enclosure,
    Error,
    GapReport,
    NoSuchSplitError,
    ParameterError,
    ParseError,
    PreconditionError,
    QuadratureError,
    TargetNotReachedError,
    certify_convexity,
    composite_enclosure,
    derivatives,
    evaluate,
    fejer_upper,
    find_split,
    half_interval_gap,
    hardy_ratio,
    hh_enclosure,
    holder_pair_bound,
    holder_product_check,
    inflection_bound,
    integrate,
    integrate_half_line,
    log_mean_bound,
    mean_enclosure_endpoint,
    mean_enclosure_midpoint,
    moment_enclosure,
    power_convexity,
    product_bound,
    refined_hh,
    reflection_gap,
    riemann_sandwich,
    series_sandwich,
    sum_series,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "ConvexityCertificate",
    "ConvexityError",
    "DomainError",
    "Enclosure",
    "Error",
    "GapReport",
    "NoSuchSplitError",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "QuadratureError",
    "TargetNotReachedError",
    "certify_convexity",
    "composite_enclosure",
    "derivatives",
    "evaluate",
    "fejer_upper",
    "find_split",
    "half_interval_gap",
    "hardy_ratio",
    "hh_enclosure",
    "holder_pair_bound",
    "holder_product_check",
    "inflection_bound",
    "integrate",
    "integrate_half_line",
    "log_mean_bound",
    "mean_enclosure_endpoint",
    "mean_enclosure_midpoint",
    "moment_enclosure",
    "power_convexity",
    "product_bound",
    "refined_hh",
    "reflection_gap",
    "riemann_sandwich",
    "series_sandwich",
    "sum_series",
    "verify",
]
