"""Command-line front end"""

from .commands import COMMANDS, EXIT_NEGATIVE, EXIT_OK
from .parsing import parse_normal_form, parse_positive_word, parse_word, read_items, split_pair

__all__ = [
    "COMMANDS",
    "EXIT_NEGATIVE",
    "EXIT_OK",
    "parse_normal_form",
    "parse_positive_word",
    "parse_word",
    "read_items",
    "split_pair",
]
