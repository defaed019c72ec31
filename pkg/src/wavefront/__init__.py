"""Top Fourier coefficient partitions for GL_n representations induced from Speh data."""

from .partitions import Partition, add, dominance_compare, not_dominated, transpose, union
from .spectrum import IsobaricDatum, arrange_columns, assumption_check, pipeline

__all__ = [
    "Partition", "add", "dominance_compare", "not_dominated", "transpose", "union",
    "IsobaricDatum", "arrange_columns", "assumption_check", "pipeline",
]
__version__ = "0.1.0"
