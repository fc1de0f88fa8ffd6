"""Independent ground-truth oracles"""

from .artin_oracle import (
    ArtinOracle,
    FreeGroupAut,
    FreeGroupElem,
    desugar_delta,
    free_inverse,
    free_reduce,
    get_artin_oracle,
)
from .positive_oracle import PositiveClassOracle, get_positive_oracle
from .garside_oracle import GarsideOracle, get_garside_oracle

__all__ = [
    "ArtinOracle",
    "FreeGroupAut",
    "FreeGroupElem",
    "GarsideOracle",
    "PositiveClassOracle",
    "desugar_delta",
    "free_inverse",
    "free_reduce",
    "get_artin_oracle",
    "get_garside_oracle",
    "get_positive_oracle",
]
