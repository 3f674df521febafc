"""Custom exceptions for the array P system toolkit."""


class ArrayPSystemError(Exception):
    """Base exception for all toolkit errors."""
    pass


class GridError(ArrayPSystemError):
    """Raised when an array picture cannot be built."""
    pass


class EmptyGridError(GridError):
    """Raised when a grid holds no symbol at all."""
    pass


class BadTokenError(GridError):
    """Raised when a grid token is not a valid symbol."""
    pass


class CollisionError(ArrayPSystemError):
    """Raised when a rule application would write onto an occupied off-ray cell."""
    pass


class ParseError(ArrayPSystemError):
    """Raised when a system, grammar or trace file cannot be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")


class ValidationError(ArrayPSystemError):
    """Raised when a system violates its well-formedness conditions."""

    def __init__(self, problems: list):
        self.problems = list(problems)
        super().__init__("; ".join(str(p) for p in self.problems) or "invalid system")


class IllegalChoiceError(ArrayPSystemError):
    """Raised when a recorded step is not legal in the configuration it is replayed on."""

    def __init__(self, step_index: int, reason: str):
        self.step_index = step_index
        super().__init__(f"step {step_index}: {reason}")


class UnknownShapeError(ArrayPSystemError):
    """Raised when a final specification names an unregistered shape."""
    pass


class TranslationError(ArrayPSystemError):
    """Base for errors raised by the grammar and machine translators."""
    pass


class SelfRecursionPresentError(TranslationError):
    """Raised when a regular grammar still contains A -> aA."""
    pass


class NotGnfError(TranslationError):
    """Raised when a context-free grammar is not in Greibach normal form."""
    pass


class SymbolNotInAlphabetError(TranslationError):
    """Raised when a word uses a symbol outside the ordered alphabet."""
    pass


class UnknownNameError(ArrayPSystemError):
    """Raised when a closed-form language name is not known."""
    pass


class ConfigurationError(ArrayPSystemError):
    """Raised when configuration is invalid."""
    pass


class ExportError(ArrayPSystemError):
    """Raised when writing an output file fails."""
    pass
