"""
Double-cycle value types

Layout of a double-cycle of sizes (n, m), N = n + m - 1 automata:
index 0 is the hub, 1..n-1 the left cycle after the hub, n..n+m-2 the right
cycle after the hub. Position k of a cycle (0 <= k < size) is the hub for
k = 0 and the k-th automaton after the hub otherwise.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from data_models.network_models import Configuration, NetworkSpec
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import AutomatonIndexError, InvalidSizeError, LabError


def kind_from_products(left_product: int, right_product: int) -> NetworkKind:
    if left_product > 0 and right_product > 0:
        return NetworkKind.POSITIVE
    if left_product < 0 and right_product < 0:
        return NetworkKind.NEGATIVE
    return NetworkKind.MIXED


def sign_product(signs: Tuple[int, ...]) -> int:
    product = 1
    for sign in signs:
        product *= sign
    return product


@dataclass(frozen=True)
class BadcSpec:
    """
    Shape of a double-cycle.

    left_signs[k] is the sign of the arc entering left position k + 1, with the
    last entry being the arc that enters the hub. right_signs likewise. Signs
    are optional; when given together with a kind they must agree.
    """

    n: int
    m: int
    kind: Optional[NetworkKind] = None
    left_signs: Optional[Tuple[int, ...]] = None
    right_signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InvalidSizeError(f"Cycle sizes must be >= 1, got n={self.n}, m={self.m}")
        if (self.left_signs is None) != (self.right_signs is None):
            raise LabError("Explicit signs must be given for both cycles or neither")
        if self.left_signs is not None:
            if len(self.left_signs) != self.n or len(self.right_signs) != self.m:
                raise LabError(
                    f"Expected {self.n} left and {self.m} right signs, "
                    f"got {len(self.left_signs)} and {len(self.right_signs)}"
                )
            if any(s not in (1, -1) for s in self.left_signs + self.right_signs):
                raise LabError("Arc signs must be +1 or -1")
            if self.kind is not None and self.kind is not self.signed_kind():
                raise LabError(
                    f"Signs describe a {self.signed_kind().value} double-cycle, not {self.kind.value}"
                )

    @property
    def count(self) -> int:
        return self.n + self.m - 1

    @property
    def has_signs(self) -> bool:
        return self.left_signs is not None

    def signed_kind(self) -> NetworkKind:
        return kind_from_products(sign_product(self.left_signs), sign_product(self.right_signs))

    def cycle_size(self, side: CycleSide) -> int:
        return self.n if side is CycleSide.LEFT else self.m

    def left_index(self, position: int) -> int:
        if not 0 <= position < self.n:
            raise AutomatonIndexError(position, self.n)
        return position

    def right_index(self, position: int) -> int:
        if not 0 <= position < self.m:
            raise AutomatonIndexError(position, self.m)
        return 0 if position == 0 else self.n - 1 + position

    def index(self, side: CycleSide, position: int) -> int:
        if side is CycleSide.LEFT:
            return self.left_index(position)
        return self.right_index(position)

    def cycle_indices(self, side: CycleSide) -> Tuple[int, ...]:
        return tuple(self.index(side, k) for k in range(self.cycle_size(side)))

    def signs(self, side: CycleSide) -> Tuple[int, ...]:
        return self.left_signs if side is CycleSide.LEFT else self.right_signs

    def word(self, x: Configuration, side: CycleSide) -> Tuple[int, ...]:
        """The cycle's word, hub first"""
        return tuple(x.bit(i) for i in self.cycle_indices(side))

    def from_words(self, left: Tuple[int, ...], right: Tuple[int, ...]) -> Configuration:
        if len(left) != self.n or len(right) != self.m:
            raise LabError(f"Words must have lengths {self.n} and {self.m}")
        if left[0] != right[0]:
            raise LabError("Both words must start with the same hub state")
        bits = list(left) + list(right[1:])
        return Configuration.from_bits(bits)


@dataclass(frozen=True)
class Relabeling:
    """
    Isomorphism between a signed double-cycle and its canonical form.

    Automaton i of the original network becomes automaton permutation[i] of
    the canonical one, with its state flipped when flips[i] is set. The
    permutation is the identity unless `swapped`, in which case the two
    cycles trade places.
    """

    flips: Tuple[bool, ...]
    permutation: Tuple[int, ...]
    swapped: bool = False

    def __post_init__(self):
        if len(self.flips) != len(self.permutation):
            raise LabError("flips and permutation must have the same length")
        if self.flips and self.flips[0]:
            raise LabError("The hub state is never flipped")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise LabError("permutation is not a bijection")

    @classmethod
    def identity(cls, count: int) -> "Relabeling":
        return cls(tuple(False for _ in range(count)), tuple(range(count)))

    @property
    def is_identity(self) -> bool:
        return not any(self.flips) and self.permutation == tuple(range(len(self.permutation)))

    def map_automaton(self, index: int) -> int:
        return self.permutation[index]

    def map_value(self, value: int) -> int:
        mapped = 0
        for index, (flip, target) in enumerate(zip(self.flips, self.permutation)):
            bit = ((value >> index) & 1) ^ int(flip)
            mapped |= bit << target
        return mapped

    def map_config(self, x: Configuration) -> Configuration:
        return Configuration(self.map_value(x.value), x.size)


@dataclass(frozen=True)
class DoubleCycle:
    """A canonical double-cycle together with the network realising it"""

    spec: BadcSpec
    network: NetworkSpec

    def __post_init__(self):
        if self.spec.kind is None:
            raise LabError("A double-cycle needs a kind")
        if self.network.count != self.spec.count:
            raise LabError(
                f"Network has {self.network.count} automata, the shape needs {self.spec.count}"
            )

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def kind(self) -> NetworkKind:
        return self.spec.kind

    @property
    def count(self) -> int:
        return self.spec.count
