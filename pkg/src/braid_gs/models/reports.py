"""Confluence, lemma, oracle and bench reports"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer, model_validator

from .normal_form import NormalForm
from .rewrite import RuleMatch
from .word import SignedWord, Word


class AmbiguityKind(str, Enum):
    OVERLAP = "overlap"      # w = lhs(left) b = a lhs(right)
    INCLUSION = "inclusion"  # w = lhs(left) = a lhs(right) b


class Ambiguity(BaseModel):
    """Word on which two rule instances compete"""
    model_config = ConfigDict(frozen=True)

    w: Word
    left: RuleMatch
    right: RuleMatch
    kind: AmbiguityKind

    def pair_key(self) -> str:
        """Unordered rule pair tally key, e.g. R1&R3"""
        first, second = sorted((self.left.rule.value, self.right.rule.value))
        return f"{first}&{second}"


class CompositionRecord(BaseModel):
    """Joinability verdict for one ambiguity"""
    ambiguity: Ambiguity
    joinable: bool
    reducts_below: bool = Field(..., description="Both one-step reducts are below w")
    nf_left: Word
    nf_right: Word

    def to_line(self) -> str:
        verdict = "joinable" if self.joinable else "FAILED"
        return (
            f"{self.ambiguity.w} | {self.ambiguity.kind.value} "
            f"{self.ambiguity.left} / {self.ambiguity.right} | {verdict} | "
            f"{self.nf_left} | {self.nf_right}"
        )


class CompositionReport(BaseModel):
    rank: int
    max_lhs_len: int
    instances: int = 0
    total: int = 0
    joinable: int = 0
    failures: List[CompositionRecord] = Field(default_factory=list)
    records: List[CompositionRecord] = Field(default_factory=list)
    pair_counts: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_counts(self) -> "CompositionReport":
        if self.joinable + len(self.failures) != self.total:
            raise ValueError(
                f"Inconsistent report: {self.joinable} joinable + "
                f"{len(self.failures)} failures != {self.total}"
            )
        return self

    @field_serializer("pair_counts")
    def _sorted_pairs(self, pair_counts: Dict[str, int]) -> Dict[str, int]:
        return dict(sorted(pair_counts.items()))

    def to_lines(self, verbose: bool = False) -> List[str]:
        lines = [
            f"rank: {self.rank}",
            f"max_lhs_len: {self.max_lhs_len}",
            f"instances: {self.instances}",
            f"ambiguities: {self.total}",
            f"joinable: {self.joinable}",
            f"failures: {len(self.failures)}",
        ]
        for pair, count in sorted(self.pair_counts.items()):
            lines.append(f"pair {pair}: {count}")
        for record in self.records if verbose else self.failures:
            lines.append(record.to_line())
        return lines


class LemmaCounterexample(BaseModel):
    formula: str
    i: int
    params: Dict[str, str] = Field(default_factory=dict)
    lhs: Word
    rhs: Word
    nf_lhs: NormalForm
    nf_rhs: NormalForm

    def to_line(self) -> str:
        params = ", ".join(f"{key}={value}" for key, value in self.params.items())
        return (
            f"{self.formula} i={self.i} [{params}] | {self.lhs} -> {self.nf_lhs} | "
            f"{self.rhs} -> {self.nf_rhs}"
        )


class FormulaTally(BaseModel):
    formula: str
    trials: int = 0
    passed: int = 0


class LemmaReport(BaseModel):
    rank: int
    trials: int
    seed: int
    tallies: List[FormulaTally] = Field(default_factory=list)
    counterexamples: List[LemmaCounterexample] = Field(default_factory=list)

    def to_lines(self) -> List[str]:
        lines = [f"rank: {self.rank}", f"trials: {self.trials}", f"seed: {self.seed}"]
        for tally in self.tallies:
            lines.append(f"{tally.formula}: {tally.passed}/{tally.trials}")
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        lines.extend(example.to_line() for example in self.counterexamples)
        return lines


class OracleDisagreement(BaseModel):
    left: SignedWord
    right: SignedWord
    engine_equal: bool
    oracle_equal: bool
    detail: Optional[str] = None

    def to_line(self) -> str:
        return (
            f"{self.left} , {self.right} | engine={self.engine_equal} "
            f"oracle={self.oracle_equal}" + (f" | {self.detail}" if self.detail else "")
        )


class OracleCheckReport(BaseModel):
    rank: int
    mode: str
    words: int = 0
    comparisons: int = 0
    disagreements: List[OracleDisagreement] = Field(default_factory=list)

    def to_lines(self) -> List[str]:
        lines = [
            f"mode: {self.mode}",
            f"rank: {self.rank}",
            f"words: {self.words}",
            f"comparisons: {self.comparisons}",
            f"disagreements: {len(self.disagreements)}",
        ]
        lines.extend(item.to_line() for item in self.disagreements)
        return lines


class BenchReport(BaseModel):
    rank: int
    words: int
    max_length: int
    seed: int
    seconds: float
    total_steps: int

    @computed_field
    @property
    def words_per_second(self) -> float:
        return self.words / self.seconds if self.seconds > 0 else float("inf")

    def to_lines(self) -> List[str]:
        mean_steps = self.total_steps / self.words if self.words else 0.0
        return [
            f"rank: {self.rank}",
            f"words: {self.words}",
            f"max_length: {self.max_length}",
            f"seed: {self.seed}",
            f"seconds: {self.seconds:.3f}",
            f"words_per_second: {self.words_per_second:.1f}",
            f"mean_steps: {mean_steps:.1f}",
        ]
