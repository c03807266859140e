"""Tangent spaces to Hilbert schemes of points at monomial ideals."""

from .census import (
    enumerate_all_artinian,
    enumerate_strongly_stable,
    search_extremes,
)
from .core import (
    MonomialIdeal,
    NotArtinian,
    ParseError,
    colength,
    format_ideal,
    is_strongly_stable,
    parse_ideal,
    power_ideal,
)
from .families import counterexample_ideal, lex_truncation_ideal
from .oracle import hom_dim
from .tangent import TangentReport, duality_slice_pairs, tangent_report

__version__ = "0.1.0"
