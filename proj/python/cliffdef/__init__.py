"""Clifford defects of numerical semigroups."""

from _cliffdef import (
    CliffdefError,
    HalfInt,
    NotNumericalError,
    NumericalSemigroup,
    UnsupportedParametersError,
    analyze,
    bound_report,
    clifford_argmax,
    clifford_defect,
    delta,
    duursma_defect,
    hermitian_quotient,
    hermitian_quotient_contains,
    hyperelliptic,
    interval,
    interval_contains,
    klein,
    ma_capability,
    norm_trace,
    norm_trace_fast_count,
    pedersen_sorensen,
    sigma,
    sigma_compare,
    suzuki,
    suzuki_fast_count,
)

__all__ = [
    "CliffdefError",
    "HalfInt",
    "NotNumericalError",
    "NumericalSemigroup",
    "UnsupportedParametersError",
    "analyze",
    "bound_report",
    "clifford_argmax",
    "clifford_defect",
    "delta",
    "duursma_defect",
    "hermitian_quotient",
    "hermitian_quotient_contains",
    "hyperelliptic",
    "interval",
    "interval_contains",
    "klein",
    "ma_capability",
    "norm_trace",
    "norm_trace_fast_count",
    "pedersen_sorensen",
    "sigma",
    "sigma_compare",
    "suzuki",
    "suzuki_fast_count",
]
