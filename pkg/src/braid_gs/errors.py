"""
Error types
Raised by the library, mapped to exit codes by the CLI
"""

from typing import Optional


class BraidError(Exception):
    """Base class for all braid-gs errors

    Must not derive from ValueError: pydantic only re-raises non-ValueErrors unwrapped.
    """


class RankMismatchError(BraidError):
    """Two words live in different ambient groups"""


class IndexRangeError(BraidError):
    """Generator index or rule parameter out of range"""


class DomainError(BraidError):
    """Input outside the domain of a word transformer"""


class StaleMatchError(BraidError):
    """A rule match no longer agrees with the letters of its host word"""


class InternalError(BraidError):
    """An engine invariant was violated"""


class StepGuardExceeded(InternalError):
    """Normalization did not terminate within the step guard

    Termination is guaranteed by the deg-lex order, so this signals a defect.
    """


class ResourceLimitError(BraidError):
    """A bounded search or enumeration hit its cap"""

    def __init__(self, message: str, reached: int):
        super().__init__(message)
        self.reached = reached


class ParseError(BraidError):
    """Lexical error in a braid word"""

    def __init__(self, message: str, position: int, token_index: Optional[int] = None):
        super().__init__(f"{message} (position {position})")
        self.position = position
        self.token_index = token_index


class ConfigurationError(BraidError):
    """Unknown or malformed verification profile, or an invalid engine setting"""
