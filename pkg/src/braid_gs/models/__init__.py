"""Models module"""

from .word import (
    DELTA,
    DELTA_INV,
    Codes,
    SignedWord,
    Word,
    artin,
    artin_index,
    check_rank,
    check_same_rank,
    is_artin,
    ladder_codes,
    letter_token,
)
from .rewrite import (
    RULE_PRIORITY,
    RULE_RANK,
    Policy,
    PolicyKind,
    RewriteTrace,
    RuleId,
    RuleInstance,
    RuleMatch,
    RuleParams,
    Span,
    TraceStep,
)
from .normal_form import NormalForm
from .reports import (
    Ambiguity,
    AmbiguityKind,
    BenchReport,
    CompositionRecord,
    CompositionReport,
    FormulaTally,
    LemmaCounterexample,
    LemmaReport,
    OracleCheckReport,
    OracleDisagreement,
)

__all__ = [
    # Words
    "DELTA",
    "DELTA_INV",
    "Codes",
    "SignedWord",
    "Word",
    "artin",
    "artin_index",
    "check_rank",
    "check_same_rank",
    "is_artin",
    "ladder_codes",
    "letter_token",
    # Rewriting
    "RULE_PRIORITY",
    "RULE_RANK",
    "Policy",
    "PolicyKind",
    "RewriteTrace",
    "RuleId",
    "RuleInstance",
    "RuleMatch",
    "RuleParams",
    "Span",
    "TraceStep",
    # Normal forms
    "NormalForm",
    # Reports
    "Ambiguity",
    "AmbiguityKind",
    "BenchReport",
    "CompositionRecord",
    "CompositionReport",
    "FormulaTally",
    "LemmaCounterexample",
    "LemmaReport",
    "OracleCheckReport",
    "OracleDisagreement",
]
