"""Pascal pyramid PP(4, q) over the (h^2 r)-cube mosaic: graph, counts, label sums."""

from .analytic import RationalGF, growth_ratio, s_generating_function, shat_generating_function
from .closed_forms import closed_form_counts, closed_form_shat
from .hpt import CapacityError, HptKind, HptRow, base_row, generate_rows, grow_row, row_census, row_value_sum
from .pyramid import LevelGraph, PascalPyramid, PyramidVertex, VertexKind, build_level, oracle_label
from .quadratic import QuadraticNumber
from .sequences import (
    CountVector,
    LinearRecurrence,
    SumVector,
    char_poly_p6,
    counts_by_recurrence,
    euclidean_counts,
    lemma31_identities,
    order_reduced_recurrences,
    sums_by_recurrence,
    transition_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CountVector",
    "HptKind",
    "HptRow",
    "LevelGraph",
    "LinearRecurrence",
    "PascalPyramid",
    "PyramidVertex",
    "QuadraticNumber",
    "RationalGF",
    "SumVector",
    "VertexKind",
    "base_row",
    "build_level",
    "char_poly_p6",
    "closed_form_counts",
    "closed_form_shat",
    "counts_by_recurrence",
    "euclidean_counts",
    "generate_rows",
    "grow_row",
    "growth_ratio",
    "lemma31_identities",
    "oracle_label",
    "order_reduced_recurrences",
    "row_census",
    "row_value_sum",
    "s_generating_function",
    "shat_generating_function",
    "sums_by_recurrence",
    "transition_matrix",
]
