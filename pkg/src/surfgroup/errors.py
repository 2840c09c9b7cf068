"""Exception hierarchy shared by every module."""


class SurfGroupError(Exception):
    """Base class for all library errors."""


class InvalidGenusError(SurfGroupError, ValueError):
    pass


class InvalidLetterError(SurfGroupError, ValueError):
    pass


class IncompatibleWordsError(SurfGroupError, ValueError):
    """Two words over different alphabets were combined."""


class ParseError(SurfGroupError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class InvalidRuleError(SurfGroupError, ValueError):
    """A rewrite rule does not match the word it is applied to."""


class ContractError(SurfGroupError, ValueError):
    """A documented precondition of an operation was violated."""

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        msg = f"precondition failed: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvalidParameterError(SurfGroupError, ValueError):
    pass


class ResourceError(SurfGroupError, RuntimeError):
    """A state or depth budget was exhausted."""


class NonTerminationError(SurfGroupError, RuntimeError):
    """A loop exceeded its proven bound. Always indicates a bug."""


class InvariantError(SurfGroupError, AssertionError):
    """An internal invariant was found broken at runtime."""
