"""Graded presentations, Hilbert series and coinvariant diagrams."""

from .diagrams import (
    DiagramCase,
    coinvariant_side_series,
    compact_side_series,
    default_cases,
    verify_diagram,
)
from .poly import MultiPoly
from .presentation import (
    GradedPresentation,
    graded_dims_oracle,
    grassmannian_presentation,
    hilbert_series_ci,
    theta_coinvariant,
)
from .series import HilbertSeries

__all__ = [
    "DiagramCase",
    "GradedPresentation",
    "HilbertSeries",
    "MultiPoly",
    "coinvariant_side_series",
    "compact_side_series",
    "default_cases",
    "graded_dims_oracle",
    "grassmannian_presentation",
    "hilbert_series_ci",
    "theta_coinvariant",
    "verify_diagram",
]
