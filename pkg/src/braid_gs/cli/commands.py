"""
Command handlers
One function per subcommand; each prints its result and returns the exit code
"""

import asyncio
import json
import logging
from argparse import Namespace
from typing import Any, List, Optional, Tuple

from ..config import VerificationProfile, get_profile
from ..errors import ConfigurationError
from ..models import NormalForm, Policy, SignedWord
from ..services import (
    BraidGroupService,
    RewriteEngine,
    get_batch_service,
    get_confluence_service,
    get_group_service,
    get_lemma_service,
    get_oracle_check_service,
)
from ..services.lemma_service import LemmaService
from ..services.oracle_check_service import OracleCheckService
from .parsing import parse_word, read_items, split_pair

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1


def _emit_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def _group(args: Namespace) -> BraidGroupService:
    """Group service honouring --step-guard"""
    if getattr(args, "step_guard", None) is not None:
        return BraidGroupService(RewriteEngine(step_guard=args.step_guard))
    return get_group_service()


def _policy(args: Namespace) -> Optional[Policy]:
    if getattr(args, "policy", "deterministic") == "random":
        return Policy.random(args.seed)
    return None


def _profile(args: Namespace) -> Optional[VerificationProfile]:
    return get_profile(args.profile) if getattr(args, "profile", None) else None


def _require_rank(args: Namespace) -> int:
    if args.rank is None:
        raise ConfigurationError(f"{args.command} needs -n/--rank or --profile")
    return args.rank


def _words(args: Namespace) -> Tuple[List[SignedWord], bool]:
    """Parsed input words and whether the output is a batch"""
    texts = list(args.words or [])
    if args.file:
        texts.extend(line for _, line in read_items(args.file))
    batch = bool(args.file) or len(texts) != 1
    return [parse_word(text, args.rank) for text in texts], batch


def _print_forms(forms: List[NormalForm], batch: bool, as_json: bool) -> None:
    if as_json:
        payload = [nf.to_json() for nf in forms]
        _emit_json(payload if batch else payload[0])
        return
    for nf in forms:
        print(nf.to_text())


def run_normalize(args: Namespace) -> int:
    words, batch = _words(args)
    group = _group(args)
    policy = _policy(args)

    if args.trace:
        entries = []
        for u in words:
            nf, trace = group.normal_form_with_trace(u, policy)
            if args.json:
                entries.append({**nf.to_json(), "trace": trace.to_lines()})
            else:
                for line in trace.to_lines():
                    print(line)
                print(nf.to_text())
        if args.json:
            _emit_json(entries if batch else entries[0])
        return EXIT_OK

    if policy is not None or group is not get_group_service():
        forms = [group.normal_form(u, policy) for u in words]
    else:
        forms = asyncio.run(get_batch_service().normalize_batch(words, args.workers))
    _print_forms(forms, batch, args.json)
    return EXIT_OK


def run_invert(args: Namespace) -> int:
    words, batch = _words(args)
    group = _group(args)
    if group is get_group_service():
        forms = asyncio.run(get_batch_service().invert_batch(words, args.workers))
    else:
        forms = [group.invert(u) for u in words]
    _print_forms(forms, batch, args.json)
    return EXIT_OK


def run_equal(args: Namespace) -> int:
    texts: List[Tuple[str, str]] = []
    if args.words:
        if len(args.words) != 2:
            raise ConfigurationError("equal takes exactly two words (or --file)")
        texts.append((args.words[0], args.words[1]))
    if args.file:
        texts.extend(split_pair(line, number) for number, line in read_items(args.file))
    if not texts:
        raise ConfigurationError("equal needs two words or --file")
    batch = bool(args.file)
    pairs = [(parse_word(u, args.rank), parse_word(v, args.rank)) for u, v in texts]

    group = _group(args)
    if group is get_group_service():
        verdicts = asyncio.run(get_batch_service().equal_batch(pairs, args.workers))
    else:
        verdicts = [group.equal(u, v) for u, v in pairs]

    if args.json:
        _emit_json(verdicts if batch else verdicts[0])
    else:
        for verdict in verdicts:
            print("true" if verdict else "false")
    return EXIT_OK if all(verdicts) else EXIT_NEGATIVE


def run_confluence(args: Namespace) -> int:
    profile = _profile(args)
    if profile is not None:
        bounds = [(bound.rank, bound.max_lhs_len) for bound in profile.confluence]
    else:
        if args.max_lhs_len is None:
            raise ConfigurationError("confluence needs -L/--max-lhs-len or --profile")
        bounds = [(_require_rank(args), args.max_lhs_len)]

    service = get_confluence_service()
    reports = [service.check_compositions(rank, limit, args.workers) for rank, limit in bounds]
    if args.json:
        payload = [report.model_dump(mode="json") for report in reports]
        _emit_json(payload if len(payload) != 1 else payload[0])
    else:
        for report in reports:
            for line in report.to_lines(verbose=args.records):
                print(line)
    return EXIT_OK if all(not report.failures for report in reports) else EXIT_NEGATIVE


def run_lemmas(args: Namespace) -> int:
    profile = _profile(args)
    if profile is not None:
        ranks = profile.lemmas.ranks
        trials, seed = profile.lemmas.trials, profile.lemmas.seed
    else:
        ranks = [_require_rank(args)]
        trials, seed = args.trials, args.seed

    service: LemmaService = get_lemma_service()
    reports = [service.lemma_suite(rank, trials, seed, args.formula) for rank in ranks]
    if args.json:
        payload = [report.model_dump(mode="json") for report in reports]
        _emit_json(payload if len(payload) != 1 else payload[0])
    else:
        for report in reports:
            for line in report.to_lines():
                print(line)
    return EXIT_OK if all(not report.counterexamples for report in reports) else EXIT_NEGATIVE


def run_oracle_check(args: Namespace) -> int:
    service: OracleCheckService = get_oracle_check_service()
    profile = _profile(args)
    selected = args.mode
    reports = []

    if profile is not None:
        bounds = profile.oracle
        if selected in (None, "exhaustive"):
            reports.append(service.exhaustive(bounds.rank, bounds.max_length))
        if selected in (None, "sampled"):
            reports.append(
                service.sampled(
                    bounds.sample_rank, bounds.sample_length, bounds.samples, bounds.seed
                )
            )
        if selected in (None, "garside"):
            reports.append(
                service.garside(
                    bounds.rank,
                    bounds.garside_length,
                    bounds.garside_sample_rank,
                    bounds.garside_sample_length,
                    bounds.garside_samples,
                    bounds.seed,
                )
            )
        if selected in (None, "embedding"):
            reports.append(service.embedding(bounds.rank, bounds.garside_length))
    else:
        rank = _require_rank(args)
        if selected == "exhaustive":
            reports.append(service.exhaustive(rank, args.length))
        elif selected == "garside":
            reports.append(
                service.garside(rank, args.length, rank, args.length, args.samples, args.seed)
            )
        elif selected == "embedding":
            reports.append(service.embedding(rank, args.length))
        else:
            reports.append(service.sampled(rank, args.length, args.samples, args.seed))

    if args.json:
        payload = [report.model_dump(mode="json") for report in reports]
        _emit_json(payload if len(payload) != 1 else payload[0])
    else:
        for report in reports:
            for line in report.to_lines():
                print(line)
    return EXIT_OK if all(not report.disagreements for report in reports) else EXIT_NEGATIVE


def run_bench(args: Namespace) -> int:
    profile = _profile(args)
    if profile is not None:
        bounds = profile.bench
        rank, words, length, seed = bounds.rank, bounds.words, bounds.length, bounds.seed
    else:
        rank, words, length, seed = _require_rank(args), args.corpus, args.length, args.seed

    report = get_oracle_check_service().bench(rank, words, length, seed)
    if args.json:
        _emit_json(report.model_dump(mode="json"))
    else:
        for line in report.to_lines():
            print(line)
    return EXIT_OK


COMMANDS = {
    "normalize": run_normalize,
    "equal": run_equal,
    "invert": run_invert,
    "confluence": run_confluence,
    "lemmas": run_lemmas,
    "oracle-check": run_oracle_check,
    "bench": run_bench,
}
