"""
Boolean automata network value types

Configurations are integer-encoded: bit i of the value is the state of
automaton i. All types here are immutable and safe to share across threads.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from helper_utilities.constants import FunctionKind
from helper_utilities.exceptions import AutomatonIndexError, InvalidSizeError, LabError


@dataclass(frozen=True, order=True)
class Configuration:
    """Global state of a network of `size` automata"""

    value: int
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise InvalidSizeError(f"Configuration size must be >= 1, got {self.size}")
        if not 0 <= self.value < (1 << self.size):
            raise LabError(f"Value {self.value} does not encode a configuration of size {self.size}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Configuration":
        bits = [1 if b else 0 for b in bits]
        value = 0
        for index, bit in enumerate(bits):
            value |= bit << index
        return cls(value, len(bits))

    @classmethod
    def zeros(cls, size: int) -> "Configuration":
        return cls(0, size)

    @classmethod
    def ones(cls, size: int) -> "Configuration":
        return cls((1 << size) - 1, size)

    def bit(self, index: int) -> int:
        if not 0 <= index < self.size:
            raise AutomatonIndexError(index, self.size)
        return (self.value >> index) & 1

    def bits(self) -> Tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.size))

    def with_bit(self, index: int, state: int) -> "Configuration":
        if not 0 <= index < self.size:
            raise AutomatonIndexError(index, self.size)
        if state:
            return Configuration(self.value | (1 << index), self.size)
        return Configuration(self.value & ~(1 << index), self.size)

    def flipped(self, index: int) -> "Configuration":
        if not 0 <= index < self.size:
            raise AutomatonIndexError(index, self.size)
        return Configuration(self.value ^ (1 << index), self.size)

    def hamming(self, other: "Configuration") -> int:
        return bin(self.value ^ other.value).count("1")

    def __int__(self) -> int:
        return self.value

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class LocalFunction:
    """
    One automaton's local transition function.

    Identity and Negation read a single source. AndGate reads two sources and
    applies a polarity (+1 as-is, -1 negated) to each before the conjunction.
    """

    kind: FunctionKind
    sources: Tuple[int, ...]
    polarities: Tuple[int, ...] = ()

    def __post_init__(self):
        expected = 2 if self.kind is FunctionKind.AND_GATE else 1
        if len(self.sources) != expected:
            raise LabError(f"{self.kind.value} takes {expected} source(s), got {len(self.sources)}")
        if self.kind is FunctionKind.AND_GATE:
            if len(self.polarities) != 2 or any(p not in (1, -1) for p in self.polarities):
                raise LabError(f"AND gate polarities must be two values in {{+1, -1}}, got {self.polarities}")
        elif self.polarities:
            raise LabError(f"{self.kind.value} does not take polarities")
        if any(s < 0 for s in self.sources):
            raise LabError(f"Negative source index in {self.sources}")

    @classmethod
    def identity(cls, source: int) -> "LocalFunction":
        return cls(FunctionKind.IDENTITY, (source,))

    @classmethod
    def negation(cls, source: int) -> "LocalFunction":
        return cls(FunctionKind.NEGATION, (source,))

    @classmethod
    def and_gate(cls, source_a: int, polarity_a: int, source_b: int, polarity_b: int) -> "LocalFunction":
        return cls(FunctionKind.AND_GATE, (source_a, source_b), (polarity_a, polarity_b))

    @classmethod
    def constant_false(cls, index: int) -> "LocalFunction":
        """x AND NOT x: always false, with no effective interaction"""
        return cls.and_gate(index, 1, index, -1)

    @classmethod
    def from_sign(cls, source: int, sign: int) -> "LocalFunction":
        return cls.identity(source) if sign > 0 else cls.negation(source)

    def evaluate(self, value: int) -> int:
        """Evaluate on an integer-encoded configuration"""
        if self.kind is FunctionKind.IDENTITY:
            return (value >> self.sources[0]) & 1
        if self.kind is FunctionKind.NEGATION:
            return 1 - ((value >> self.sources[0]) & 1)
        result = 1
        for source, polarity in zip(self.sources, self.polarities):
            bit = (value >> source) & 1
            result &= bit if polarity > 0 else 1 - bit
        return result

    def evaluate_many(self, states: np.ndarray) -> np.ndarray:
        """Vectorised evaluate over an array of integer-encoded configurations"""
        if self.kind is FunctionKind.IDENTITY:
            return (states >> self.sources[0]) & 1
        if self.kind is FunctionKind.NEGATION:
            return 1 - ((states >> self.sources[0]) & 1)
        result = np.ones_like(states)
        for source, polarity in zip(self.sources, self.polarities):
            bits = (states >> source) & 1
            result &= bits if polarity > 0 else 1 - bits
        return result

    def describe(self) -> str:
        if self.kind is FunctionKind.IDENTITY:
            return f"x{self.sources[0]}"
        if self.kind is FunctionKind.NEGATION:
            return f"!x{self.sources[0]}"
        terms = [f"{'' if p > 0 else '!'}x{s}" for s, p in zip(self.sources, self.polarities)]
        return " & ".join(terms)


@dataclass(frozen=True)
class NetworkSpec:
    """A Boolean automata network: one local function per automaton"""

    functions: Tuple[LocalFunction, ...]

    def __post_init__(self):
        if not self.functions:
            raise InvalidSizeError("A network needs at least one automaton")
        for function in self.functions:
            for source in function.sources:
                if source >= len(self.functions):
                    raise AutomatonIndexError(source, len(self.functions))

    @property
    def count(self) -> int:
        return len(self.functions)

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.count:
            raise AutomatonIndexError(index, self.count)

    def check_configuration(self, x: Configuration) -> None:
        if x.size != self.count:
            raise LabError(f"Configuration of size {x.size} does not fit a network of {self.count} automata")

    def reads_itself(self) -> bool:
        return any(i in f.sources for i, f in enumerate(self.functions))


@dataclass(frozen=True, order=True)
class SignedArc:
    """Effective interaction source -> target with constant nonzero sign"""

    source: int
    target: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise LabError(f"Arc sign must be +1 or -1, got {self.sign}")
