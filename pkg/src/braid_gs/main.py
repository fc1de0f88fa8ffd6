"""
braid-gs - Main command-line application
Normal forms, equality and verification suites for the braid groups B_{n+1}
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .cli import COMMANDS
from .config import get_settings
from .errors import (
    ConfigurationError,
    DomainError,
    IndexRangeError,
    InternalError,
    ParseError,
    RankMismatchError,
    ResourceLimitError,
)

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_RESOURCE = 3

USAGE_ERRORS = (
    ParseError,
    IndexRangeError,
    RankMismatchError,
    DomainError,
    ConfigurationError,
    ValidationError,
    OSError,
)
# StepGuardExceeded is an InternalError
RESOURCE_ERRORS = (ResourceLimitError, InternalError)


def _add_word_io(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-n", "--rank", type=int, required=True, help="Rank n; the group is B_{n+1}"
    )
    parser.add_argument("words", nargs="*", help="Braid words, e.g. 'a1 a2^-1 D'")
    parser.add_argument("-f", "--file", help="Batch file, one item per line")
    parser.add_argument("--json", action="store_true", help="Structured output")
    parser.add_argument("--step-guard", type=int, help="Rewrite step limit per word")


def _add_profile(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", "--rank", type=int, help="Rank n; the group is B_{n+1}")
    parser.add_argument("--profile", help="Take bounds from a verification profile")
    parser.add_argument("--json", action="store_true", help="Structured output")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation"""
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="braid-gs",
        description="Normal forms in the braid group B_{n+1} in the Artin-Garside generators",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument(
        "--workers", type=int, default=settings.WORKERS, help="Process pool size for batch work"
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.SERVICE_VERSION}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    normalize = sub.add_parser("normalize", help="Print the normal form D^k | A")
    _add_word_io(normalize)
    normalize.add_argument("--trace", action="store_true", help="Print every rewrite step")
    normalize.add_argument(
        "--policy", choices=["deterministic", "random"], default="deterministic"
    )
    normalize.add_argument("--seed", type=int, default=0, help="Seed of the random policy")

    equal = sub.add_parser("equal", help="Decide equality of two words (exit 1 if different)")
    _add_word_io(equal)

    invert = sub.add_parser("invert", help="Print the normal form of the inverse")
    _add_word_io(invert)

    confluence = sub.add_parser("confluence", help="Check all compositions up to an LHS length")
    _add_profile(confluence)
    confluence.add_argument("-L", "--max-lhs-len", type=int, help="LHS length bound")
    confluence.add_argument("--records", action="store_true", help="List every ambiguity")

    lemmas = sub.add_parser("lemmas", help="Property-check the derived identities")
    _add_profile(lemmas)
    lemmas.add_argument("--trials", type=int, default=50, help="Instantiations per formula")
    lemmas.add_argument("--seed", type=int, default=0)
    lemmas.add_argument("--formula", action="append", help="Only this formula (repeatable)")

    oracle = sub.add_parser("oracle-check", help="Cross-check the engine against the oracles")
    _add_profile(oracle)
    modes = oracle.add_mutually_exclusive_group()
    modes.add_argument("--exhaustive", dest="mode", action="store_const", const="exhaustive")
    modes.add_argument("--sampled", dest="mode", action="store_const", const="sampled")
    modes.add_argument("--garside", dest="mode", action="store_const", const="garside")
    modes.add_argument("--embedding", dest="mode", action="store_const", const="embedding")
    oracle.add_argument("--length", type=int, default=4, help="Word length bound")
    oracle.add_argument("--samples", type=int, default=100, help="Random samples")
    oracle.add_argument("--seed", type=int, default=0)

    bench = sub.add_parser("bench", help="Time normalization over a random corpus")
    _add_profile(bench)
    bench.add_argument("--words", dest="corpus", type=int, default=200, help="Corpus size")
    bench.add_argument("--length", type=int, default=12, help="Word length")
    bench.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else get_settings().LOG_LEVEL.upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RESOURCE_ERRORS as e:
        logger.error(f"{args.command} aborted: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except Exception as e:
        logger.error(f"{args.command} crashed: {e}", exc_info=True)
        print(f"error: internal failure: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
