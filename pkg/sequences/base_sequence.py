"""
Base sequence class for named update sequences (macros)
Provides argument resolution, network-kind checks and bookkeeping shared by
all macros
"""

from abc import ABC, abstractmethod
from typing import Any, FrozenSet, List, Optional, Sequence, Tuple

from data_models.network_models import Configuration
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import LabError, NetworkKindError
from helper_utilities.validators import ConfigurationTextValidator
from sequences.runner import SequenceRunner

# Argument kinds a macro may declare
CYCLE = "cycle"
CONFIGURATION = "configuration"
BIT = "bit"


class BaseSequence(ABC):
    """Abstract base class for all named sequences"""

    argument_kinds: Tuple[str, ...] = ()
    allowed_kinds: Optional[FrozenSet[NetworkKind]] = None

    def __init__(self):
        """Initialize base sequence"""
        self.name = self.get_sequence_name()

    @abstractmethod
    def get_sequence_name(self) -> str:
        """Get the name programs use to call this sequence"""
        pass

    @abstractmethod
    def apply(self, runner: SequenceRunner, *arguments: Any) -> None:
        """Run the sequence against the runner's live configuration"""
        pass

    def usage(self) -> str:
        return " ".join([self.name] + [f"<{kind}>" for kind in self.argument_kinds])

    def check_kind(self, runner: SequenceRunner) -> None:
        if self.allowed_kinds is not None and runner.double_cycle.kind not in self.allowed_kinds:
            allowed = ", ".join(sorted(kind.value for kind in self.allowed_kinds))
            raise NetworkKindError(
                f"{self.name} runs on {allowed} double-cycles, not {runner.double_cycle.kind.value}"
            )

    def check_argument_text(self, arguments: Sequence[str]) -> Optional[Tuple[int, str]]:
        """Syntax check used by the parser: (argument position, message) of the first bad argument"""
        if len(arguments) != len(self.argument_kinds):
            return (len(arguments), f"{self.name} takes {len(self.argument_kinds)} argument(s): {self.usage()}")
        for position, (kind, text) in enumerate(zip(self.argument_kinds, arguments)):
            if kind == CYCLE and text not in ("L", "R"):
                return (position, f"expected cycle L or R, got '{text}'")
            if kind == BIT and text not in ("0", "1"):
                return (position, f"expected 0 or 1, got '{text}'")
            if kind == CONFIGURATION and not ConfigurationTextValidator.looks_like(text):
                return (position, f"expected a configuration (wl,wr), got '{text}'")
        return None

    def resolve_arguments(self, runner: SequenceRunner, arguments: Sequence[Any]) -> List[Any]:
        """Turn textual or typed arguments into CycleSide / Configuration / int values"""
        if len(arguments) != len(self.argument_kinds):
            raise LabError(f"{self.name} takes {len(self.argument_kinds)} argument(s): {self.usage()}")
        resolved = []
        for kind, value in zip(self.argument_kinds, arguments):
            if kind == CYCLE:
                resolved.append(value if isinstance(value, CycleSide) else CycleSide(str(value)))
            elif kind == CONFIGURATION:
                if isinstance(value, Configuration):
                    if value.size != runner.double_cycle.count:
                        raise LabError(f"{self.name}: target configuration has the wrong size")
                    resolved.append(value)
                else:
                    spec = runner.spec
                    left, right = ConfigurationTextValidator(spec.n, spec.m).parse(str(value))
                    resolved.append(spec.from_words(left, right))
            else:
                bit = int(value)
                if bit not in (0, 1):
                    raise LabError(f"{self.name}: expected 0 or 1, got {value!r}")
                resolved.append(bit)
        return resolved

    def run(self, runner: SequenceRunner, arguments: Sequence[Any] = ()) -> None:
        """Check the network kind, resolve arguments and apply"""
        self.check_kind(runner)
        self.apply(runner, *self.resolve_arguments(runner, arguments))
