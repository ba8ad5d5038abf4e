"""
Constants for the double-cycle laboratory
"""

from enum import Enum


class NetworkKind(Enum):
    """Kinds of double-cycles, decided by the sign products of both cycles"""
    POSITIVE = "positive"
    MIXED = "mixed"
    NEGATIVE = "negative"


class FunctionKind(Enum):
    """Local function families supported by the network model"""
    IDENTITY = "identity"
    NEGATION = "negation"
    AND_GATE = "and"


class AttractorKind(Enum):
    """Attractor classification by size"""
    STABLE_CONFIGURATION = "stable_configuration"
    STABLE_OSCILLATION = "stable_oscillation"


class CycleSide(Enum):
    """The two cycles of a double-cycle"""
    LEFT = "L"
    RIGHT = "R"

    @property
    def other(self) -> "CycleSide":
        return CycleSide.RIGHT if self is CycleSide.LEFT else CycleSide.LEFT


class OutputFormat(Enum):
    """Report formats for the command line"""
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class Suite(Enum):
    """Verification suites"""
    POSITIVE = "positive"
    MIXED = "mixed"
    NEGATIVE = "negative"
    QUADRATIC = "quadratic"
    CYCLE_THEOREMS = "cycles"
    COPY = "copy"
    CANONICALIZATION = "canonicalization"


class LabConstants:
    """Defaults shared by the services, the CLI and the web API"""

    SCHEMA_VERSION = 1

    # Enumeration limits
    DEFAULT_ENUMERATION_CAP = 24
    DEFAULT_API_ENUMERATION_CAP = 16
    GRAPH_CHUNK_STATES = 1 << 16
    DEFAULT_EXHAUSTIVE_MAX = 9
    DEFAULT_SAMPLED_MAX = 13
    DEFAULT_SAMPLE_STARTS = 64
    DEFAULT_SEED = 20140101

    # Cycle-theorem sampling
    DEFAULT_CYCLE_SAMPLES = 200
    DEFAULT_CYCLE_MAX_N = 8
    CYCLE_MAX_N_LIMIT = 10

    # Canonicalization sampling
    DEFAULT_CANONICAL_SAMPLES = 50

    # Reports
    ATTRACTOR_SAMPLE_MEMBERS = 4
    DOT_ATTRACTOR_COLOR = "firebrick"


class ExitCode:
    """Process exit statuses of manage.py"""
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2


# Instruction names recognised by the program parser
ELEMENTARY_INSTRUCTIONS = ("sync", "update", "incUp", "decUp", "erase", "expand", "shift")
