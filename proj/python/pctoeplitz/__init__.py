"""Toeplitz operators with piecewise continuous symbols on Hardy spaces."""

from ._core import (
    BudgetError,
    DomainError,
    Error,
    InSpectrumError,
    ParseError,
    Symbol,
    apply_toeplitz,
    arc_membership,
    arc_points,
    bmo_log_seminorm,
    bmo_seminorm,
    cauchy_singular,
    complementary_part_samples,
    complementary_project,
    essential_spectrum,
    finite_section_probe,
    fredholm_index,
    h1_boundedness_verdict,
    h1_growth_experiment,
    hardy_norm,
    is_in_essential_spectrum,
    poisson_extension,
    riesz_project,
    toeplitz_section,
)

__all__ = [name for name in dir() if not name.startswith("_")]
