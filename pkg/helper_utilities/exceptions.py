"""
Exception hierarchy for the double-cycle laboratory

Every error raised on purpose by the library derives from LabError, which is
itself a ValueError so that callers catching ValueError keep working.
"""

from typing import Optional


class LabError(ValueError):
    """Base class for all laboratory errors"""


class InvalidSizeError(LabError):
    """Cycle or network size outside the supported range"""


class AutomatonIndexError(LabError):
    """Automaton index outside the network"""

    def __init__(self, index: int, count: int):
        self.index = index
        self.count = count
        super().__init__(f"Automaton index {index} out of range for a network of {count} automata")


class StateSpaceTooLargeError(LabError):
    """Enumerating the configuration space would exceed the configured cap"""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"Refusing to enumerate 2^{count} configurations (cap is N <= {cap})")


class NonSimpleNetworkError(LabError):
    """An interaction whose nonzero sign changes with the configuration"""

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"Interaction {source} -> {target} takes both signs; the network is not simple")


class ConfigurationSyntaxError(LabError):
    """Malformed configuration text"""


class ProgramSyntaxError(LabError):
    """Malformed program text, located by line and column (both 1-based)"""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.detail = message
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownMacroError(ProgramSyntaxError):
    """Instruction name that is neither elementary nor a registered macro"""

    def __init__(self, name: str, line: int, column: int):
        self.name = name
        super().__init__(f"unknown instruction or macro '{name}'", line, column)


class PreconditionError(LabError):
    """A macro was run on a configuration outside its precondition"""

    def __init__(self, message: str, property_name: Optional[str] = None):
        self.property_name = property_name
        super().__init__(message)


class NetworkKindError(LabError):
    """A macro was run on the wrong kind of double-cycle"""


class UndefinedKappaError(LabError):
    """expand found no pattern to stop at (strict mode only)"""
