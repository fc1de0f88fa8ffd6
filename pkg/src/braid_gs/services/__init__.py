"""Services module"""

from .rewrite_service import RewriteEngine, get_rewrite_engine
from .group_service import BraidGroupService, get_group_service
from .batch_service import BatchService, get_batch_service, map_in_pool
from .confluence_service import ConfluenceService, get_confluence_service
from .lemma_service import FORMULAS, LemmaFormula, LemmaService, get_lemma_service
from .oracle_check_service import OracleCheckService, get_oracle_check_service, scramble

__all__ = [
    "RewriteEngine",
    "get_rewrite_engine",
    "BraidGroupService",
    "get_group_service",
    "BatchService",
    "get_batch_service",
    "map_in_pool",
    "ConfluenceService",
    "get_confluence_service",
    "FORMULAS",
    "LemmaFormula",
    "LemmaService",
    "get_lemma_service",
    "OracleCheckService",
    "get_oracle_check_service",
    "scramble",
]
