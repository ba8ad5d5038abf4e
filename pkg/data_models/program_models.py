"""
Instruction, program and trace types for update sequences
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from data_models.network_models import Configuration
from helper_utilities.constants import CycleSide
from helper_utilities.exceptions import LabError


class Instruction:
    """Base class of parsed instructions"""

    opcode = ""

    def to_text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Sync(Instruction):
    opcode = "sync"

    def to_text(self) -> str:
        return "sync"


@dataclass(frozen=True)
class Update(Instruction):
    cycle: CycleSide
    index: int
    opcode = "update"

    def __post_init__(self):
        if self.index < 1:
            raise LabError("Only sync updates the hub; update indices start at 1")

    def to_text(self) -> str:
        return f"update {self.cycle.value} {self.index}"


@dataclass(frozen=True)
class IncUp(Instruction):
    cycle: CycleSide
    first: int
    last: int
    opcode = "incUp"

    def __post_init__(self):
        if self.first < 1 or self.last < 1:
            raise LabError("incUp indices start at 1")

    def to_text(self) -> str:
        return f"incUp {self.cycle.value} {self.first} {self.last}"


@dataclass(frozen=True)
class DecUp(Instruction):
    cycle: CycleSide
    first: int
    last: int
    opcode = "decUp"

    def __post_init__(self):
        if self.first < 1 or self.last < 1:
            raise LabError("decUp indices start at 1")

    def to_text(self) -> str:
        return f"decUp {self.cycle.value} {self.first} {self.last}"


@dataclass(frozen=True)
class Erase(Instruction):
    cycle: CycleSide
    opcode = "erase"

    def to_text(self) -> str:
        return f"erase {self.cycle.value}"


@dataclass(frozen=True)
class Expand(Instruction):
    cycle: CycleSide
    opcode = "expand"

    def to_text(self) -> str:
        return f"expand {self.cycle.value}"


@dataclass(frozen=True)
class Shift(Instruction):
    cycle: CycleSide
    opcode = "shift"

    def to_text(self) -> str:
        return f"shift {self.cycle.value}"


@dataclass(frozen=True)
class Macro(Instruction):
    """A named sequence; arguments are kept as text and resolved at run time"""

    name: str
    arguments: Tuple[str, ...] = ()
    opcode = "macro"

    def to_text(self) -> str:
        return " ".join((self.name,) + self.arguments)


@dataclass(frozen=True)
class Program:
    instructions: Tuple[Instruction, ...] = ()

    def __len__(self) -> int:
        return len(self.instructions)

    def __iter__(self):
        return iter(self.instructions)

    def to_text(self) -> str:
        return "\n".join(instruction.to_text() for instruction in self.instructions)


@dataclass(frozen=True)
class UpdateRecord:
    automaton: int
    old: int
    new: int

    @property
    def effective(self) -> bool:
        return self.old != self.new


@dataclass(frozen=True)
class Trace:
    """
    Everything a run did: each attempted update in order, the final
    configuration, and notes about certification and macro variants.
    """

    start: Configuration
    updates: Tuple[UpdateRecord, ...]
    final: Configuration
    annotations: Tuple[str, ...] = ()
    certified: bool = True
    variants: Tuple[str, ...] = ()

    @property
    def attempted_count(self) -> int:
        return len(self.updates)

    @property
    def effective_count(self) -> int:
        return sum(1 for record in self.updates if record.effective)

    def replay(self) -> Configuration:
        """Rebuild the final configuration from the start and the recorded updates"""
        x = self.start
        for record in self.updates:
            if x.bit(record.automaton) != record.old:
                raise LabError(f"Trace is inconsistent at automaton {record.automaton}")
            x = x.with_bit(record.automaton, record.new)
        return x

    def to_dict(self) -> Dict[str, Any]:
        return {
            "updates": [[r.automaton, r.old, r.new] for r in self.updates],
            "attempted": self.attempted_count,
            "effective": self.effective_count,
            "certified": self.certified,
            "annotations": list(self.annotations),
            "variants": list(self.variants),
        }


@dataclass
class TraceBuilder:
    """Mutable accumulator used while a program runs"""

    start: Configuration
    current: Optional[Configuration] = None
    updates: List[UpdateRecord] = field(default_factory=list)
    annotations: List[str] = field(default_factory=list)
    variants: List[str] = field(default_factory=list)
    certified: bool = True

    def __post_init__(self):
        if self.current is None:
            self.current = self.start

    def record(self, automaton: int, new: int) -> None:
        old = self.current.bit(automaton)
        self.updates.append(UpdateRecord(automaton, old, new))
        if old != new:
            self.current = self.current.with_bit(automaton, new)

    def effective_since(self, mark: int) -> int:
        return sum(1 for record in self.updates[mark:] if record.effective)

    def build(self) -> Trace:
        return Trace(
            start=self.start,
            updates=tuple(self.updates),
            final=self.current,
            annotations=tuple(self.annotations),
            certified=self.certified,
            variants=tuple(self.variants),
        )
