"""Rule schemas, matches and rewrite traces"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_serializer

from .word import Codes, Word, letter_token

Span = Tuple[int, int]


class RuleId(str, Enum):
    """The seven concrete relations of the basis"""
    R5A = "R5a"  # D D^-1 = 1
    R5B = "R5b"  # D^-1 D = 1
    R4 = "R4"    # a_l D = D a_{n-l+1}
    R4P = "R4p"  # a_l D^-1 = D^-1 a_{n-l+1}
    R2 = "R2"    # far commutation
    R1 = "R1"    # braid schema
    R3 = "R3"    # ladder absorption into D


# Deterministic policy and find_matches tie-break order
RULE_PRIORITY: Tuple[RuleId, ...] = (
    RuleId.R5A,
    RuleId.R5B,
    RuleId.R4,
    RuleId.R4P,
    RuleId.R2,
    RuleId.R1,
    RuleId.R3,
)
RULE_RANK = {rule: position for position, rule in enumerate(RULE_PRIORITY)}


def _render(codes: Codes) -> str:
    return " ".join(letter_token(code) for code in codes)


class RuleParams(BaseModel):
    """Rule-specific parameters; unused fields stay at their defaults"""
    model_config = ConfigDict(frozen=True)

    i: Optional[int] = None
    j: Optional[int] = None
    s: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    v: Codes = Field(default=(), description="R1: V(1,i-1)")
    w: Codes = Field(default=(), description="R1: W(j,i)")
    ladder: Tuple[Codes, ...] = Field(default=(), description="R3: V_1 .. V_{n-1}")

    def describe(self, rule: RuleId) -> str:
        if rule == RuleId.R1:
            return f"i={self.i},j={self.j},V={_render(self.v)},W={_render(self.w)}"
        if rule == RuleId.R2:
            return f"s={self.s},k={self.k}"
        if rule == RuleId.R3:
            return ",".join(f"V{m}={_render(part)}" for m, part in enumerate(self.ladder, 1))
        if rule in (RuleId.R4, RuleId.R4P):
            return f"l={self.l}"
        return ""


class RuleInstance(BaseModel):
    """A fully parameterized rule of a given rank"""
    model_config = ConfigDict(frozen=True)

    rule: RuleId
    params: RuleParams
    rank: int

    def __str__(self) -> str:
        return f"{self.rule.value}({self.params.describe(self.rule)})"


class RuleMatch(BaseModel):
    """Located instance of a rule LHS inside a host word"""
    model_config = ConfigDict(frozen=True)

    rule: RuleId
    start: int = Field(..., ge=0)
    end: int = Field(..., ge=0, description="Half-open end of the LHS span")
    params: RuleParams
    v_span: Optional[Span] = None
    w_span: Optional[Span] = None
    ladder_spans: Tuple[Span, ...] = ()

    def __str__(self) -> str:
        return f"{self.rule.value}({self.params.describe(self.rule)})@[{self.start},{self.end})"

    @model_serializer(when_used="json")
    def _dump_text(self) -> str:
        return str(self)


class PolicyKind(str, Enum):
    """Match selection policy of normalize"""
    DETERMINISTIC = "deterministic"
    RANDOM = "random"


class Policy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: PolicyKind = PolicyKind.DETERMINISTIC
    seed: Optional[int] = None

    @classmethod
    def deterministic(cls) -> "Policy":
        return cls(kind=PolicyKind.DETERMINISTIC)

    @classmethod
    def random(cls, seed: int) -> "Policy":
        return cls(kind=PolicyKind.RANDOM, seed=seed)


class TraceStep(BaseModel):
    """One rewrite: word before, applied match, word after"""
    model_config = ConfigDict(frozen=True)

    before: Word
    match: RuleMatch
    after: Word

    def to_line(self) -> str:
        rule = self.match.rule
        return f"{self.before} | {rule.value}({self.match.params.describe(rule)}) | {self.after}"


class RewriteTrace(BaseModel):
    """Chain u -> u1 -> u2 -> ... produced by normalize"""
    steps: List[TraceStep] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def to_lines(self) -> List[str]:
        return [step.to_line() for step in self.steps]
