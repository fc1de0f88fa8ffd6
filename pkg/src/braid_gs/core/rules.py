"""
Rule schemas of the Groebner-Shirshov basis in the Artin-Garside generators

  R1   a_{i+1} a_i V(1,i-1) W(j,i) a_{i+1,j} -> a_i a_{i+1} a_i V a_{ij} W'
  R2   a_s a_k -> a_k a_s,  s - k >= 2
  R3   a_1 V_1 a_2 a_1 V_2 ... V_{n-1} a_n ... a_1 -> D V_1^(n-1) V_2^(n-2) ... V_{n-1}'
  R4   a_l D -> D a_{n-l+1}
  R4p  a_l D^-1 -> D^-1 a_{n-l+1}
  R5a  D D^-1 -> 1
  R5b  D^-1 D -> 1
"""

from typing import Tuple

from ..errors import IndexRangeError
from ..models import (
    DELTA,
    DELTA_INV,
    Codes,
    RuleId,
    RuleInstance,
    RuleParams,
    Word,
    artin,
    artin_index,
    check_rank,
    is_artin,
)
from .words import lambda_codes, run_codes, shift_codes


def _indices_within(codes: Codes, low: int, high: int) -> bool:
    return all(is_artin(code) and low <= artin_index(code) <= high for code in codes)


def _require(condition: bool, rule: RuleId, message: str) -> None:
    if not condition:
        raise IndexRangeError(f"{rule.value}: {message}")


def validate_params(rule: RuleId, params: RuleParams, rank: int) -> None:
    """Range check of a rule parameterization"""
    check_rank(rank)
    n = rank
    if rule == RuleId.R1:
        i, j = params.i, params.j
        _require(i is not None and 1 <= i <= n - 1, rule, f"i={i} not in [1, {n - 1}]")
        _require(j is not None and 1 <= j <= i + 1, rule, f"j={j} not in [1, {i + 1}]")
        _require(_indices_within(params.v, 1, i - 1), rule, "V must use a_1..a_{i-1}")
        _require(_indices_within(params.w, j, i), rule, f"W must use a_{j}..a_{i}")
        _require(
            not params.w or params.w[0] == artin(i), rule, f"W must begin with a{i}"
        )
    elif rule == RuleId.R2:
        s, k = params.s, params.k
        _require(s is not None and k is not None, rule, "s and k are required")
        _require(1 <= k and s <= n and s - k >= 2, rule, f"need 1 <= k, s <= {n}, s-k >= 2")
    elif rule == RuleId.R3:
        _require(len(params.ladder) == n - 1, rule, f"needs {n - 1} ladder words")
        for m, part in enumerate(params.ladder, 1):
            _require(_indices_within(part, 1, m), rule, f"V_{m} must use a_1..a_{m}")
    elif rule in (RuleId.R4, RuleId.R4P):
        _require(params.l is not None and 1 <= params.l <= n, rule, f"l not in [1, {n}]")


def lhs_codes(rule: RuleId, params: RuleParams, rank: int) -> Codes:
    """Leading word of a rule instance; parameters are assumed valid"""
    n = rank
    if rule == RuleId.R1:
        i, j = params.i, params.j
        return (artin(i + 1), artin(i)) + params.v + params.w + run_codes(i + 1, j)
    if rule == RuleId.R2:
        return artin(params.s), artin(params.k)
    if rule == RuleId.R3:
        codes = list(lambda_codes(1))
        for m, part in enumerate(params.ladder, 1):
            codes.extend(part)
            codes.extend(lambda_codes(m + 1))
        return tuple(codes)
    if rule == RuleId.R4:
        return artin(params.l), DELTA
    if rule == RuleId.R4P:
        return artin(params.l), DELTA_INV
    if rule == RuleId.R5A:
        return DELTA, DELTA_INV
    return DELTA_INV, DELTA


def rhs_codes(rule: RuleId, params: RuleParams, rank: int) -> Codes:
    """Right-hand side of a rule instance; parameters are assumed valid"""
    n = rank
    if rule == RuleId.R1:
        i, j = params.i, params.j
        return (
            (artin(i), artin(i + 1), artin(i))
            + params.v
            + run_codes(i, j)
            + shift_codes(params.w, 1)
        )
    if rule == RuleId.R2:
        return artin(params.k), artin(params.s)
    if rule == RuleId.R3:
        codes = [DELTA]
        for m, part in enumerate(params.ladder, 1):
            codes.extend(shift_codes(part, n - m))
        return tuple(codes)
    if rule == RuleId.R4:
        return DELTA, artin(n - params.l + 1)
    if rule == RuleId.R4P:
        return DELTA_INV, artin(n - params.l + 1)
    return ()


def instantiate_lhs(rule: RuleId, params: RuleParams, rank: int) -> Word:
    validate_params(rule, params, rank)
    return Word.trusted(lhs_codes(rule, params, rank), rank)


def instantiate_rhs(rule: RuleId, params: RuleParams, rank: int) -> Word:
    validate_params(rule, params, rank)
    return Word.trusted(rhs_codes(rule, params, rank), rank)


def instantiate(instance: RuleInstance) -> Tuple[Word, Word]:
    """Both sides of a rule instance"""
    return (
        instantiate_lhs(instance.rule, instance.params, instance.rank),
        instantiate_rhs(instance.rule, instance.params, instance.rank),
    )
