"""Exact decomposition of Foulkes-type permutation characters of symmetric groups."""

from foulkes.partitions import (
    Partition,
    parse_partition,
    format_partition,
    conjugate,
    dominates,
    enum_partitions,
    box_partitions,
    count_box_partitions,
)
from foulkes.decomposition import (
    FoulkesShape,
    GeneralizedShape,
    DecompositionTable,
    decompose,
    multiplicity,
    gen_multiplicity,
    orbit_size,
)
from foulkes.vanishing import (
    Prediction,
    Verdict,
    Rule,
    predictions_for,
    census,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "parse_partition",
    "format_partition",
    "conjugate",
    "dominates",
    "enum_partitions",
    "box_partitions",
    "count_box_partitions",
    "FoulkesShape",
    "GeneralizedShape",
    "DecompositionTable",
    "decompose",
    "multiplicity",
    "gen_multiplicity",
    "orbit_size",
    "Prediction",
    "Verdict",
    "Rule",
    "predictions_for",
    "census",
    "verify_all",
    "__version__",
]
