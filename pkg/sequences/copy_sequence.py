"""
Copy sequences: overwrite cycles with a target configuration's words
"""

from enum import Enum
from typing import Optional, Sequence, Tuple

from data_models.network_models import Configuration
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import PreconditionError
from sequences.base_sequence import BaseSequence, CONFIGURATION, CYCLE
from sequences.runner import SequenceRunner


class CopyCondition(Enum):
    """Shapes of (current word, target word) under which a cycle copy is exact"""
    ALTERNATING = "alternating"
    TAIL_MATCHES = "alternating-prefix-tail-matches"
    INNER_DIFFERS = "alternating-prefix-inner-differs"


def _alternates(word: Sequence[int], stop: int) -> bool:
    """word[i] != word[i - 1] for every 1 <= i < stop"""
    return all(word[i] != word[i - 1] for i in range(1, stop))


def copy_condition(word: Sequence[int], target: Sequence[int]) -> Optional[CopyCondition]:
    """Which copy condition (word, target) satisfies, None if none does"""
    size = len(word)
    if word[0] != target[0]:
        return None
    if _alternates(word, size):
        return CopyCondition.ALTERNATING
    if not _alternates(word, size - 1):
        return None
    if word[size - 1] == target[size - 1]:
        return CopyCondition.TAIL_MATCHES
    if any(word[p] != target[p] for p in range(1, size - 1)):
        return CopyCondition.INNER_DIFFERS
    return None


def cycle_copy_bound(size: int) -> int:
    """Most effective updates one cycle copy can make"""
    return max(2 * (size - 2), size - 1, 0)


def copy_cycle(runner: SequenceRunner, side: CycleSide, target: Configuration) -> None:
    target_word = runner.spec.word(target, side)
    word = runner.word(side)
    if word[0] != target_word[0]:
        raise PreconditionError(
            f"copy {side.value}: hub state differs from the target's", property_name="hub"
        )
    if copy_condition(word, target_word) is None:
        raise PreconditionError(
            f"copy {side.value}: {''.join(map(str, word))} -> {''.join(map(str, target_word))} "
            f"meets none of the copy conditions",
            property_name="copy-condition",
        )
    size = len(word)
    last = size - 1
    j = size
    if size >= 2 and word[last] == word[last - 1] and word[last] != target_word[last]:
        differing = [k for k in range(last) if word[k] != target_word[k]]
        if not differing:
            raise PreconditionError(
                f"copy {side.value}: no differing automaton before the last one",
                property_name="copy-condition",
            )
        j = max(differing)
    for k in range(last, j, -1):
        runner.update(side, k - 1)
        runner.update(side, k)
    for k in range(j - 1, 0, -1):
        if runner.state(side, k) != target_word[k]:
            runner.update(side, k)


class CopyCycleSequence(BaseSequence):
    """copy_c: copy one cycle's word from the target"""

    argument_kinds = (CYCLE, CONFIGURATION)

    def get_sequence_name(self) -> str:
        return "copy_c"

    def apply(self, runner: SequenceRunner, side: CycleSide, target: Configuration) -> None:
        copy_cycle(runner, side, target)


class CopySequence(BaseSequence):
    """copy: the left cycle, then the right one"""

    argument_kinds = (CONFIGURATION,)

    def get_sequence_name(self) -> str:
        return "copy"

    def apply(self, runner: SequenceRunner, target: Configuration) -> None:
        copy_cycle(runner, CycleSide.LEFT, target)
        copy_cycle(runner, CycleSide.RIGHT, target)


class CopyFromAlternatingSequence(BaseSequence):
    """
    copy_p: reach any target from a configuration alternating in both cycles.

    When the hub differs from the target's, both cycles are shifted and the
    hub synchronised first, which keeps both cycles alternating.
    """

    argument_kinds = (CONFIGURATION,)
    allowed_kinds = frozenset({NetworkKind.NEGATIVE})

    def get_sequence_name(self) -> str:
        return "copy_p"

    def apply(self, runner: SequenceRunner, target: Configuration) -> None:
        for side in (CycleSide.LEFT, CycleSide.RIGHT):
            word = runner.word(side)
            if not _alternates(word, len(word)):
                raise PreconditionError(
                    f"copy_p: cycle {side.value} is not alternating ({''.join(map(str, word))})",
                    property_name="alternating",
                )
        if runner.hub != target.bit(0):
            runner.shift(CycleSide.LEFT)
            runner.shift(CycleSide.RIGHT)
            runner.sync()
            if runner.hub != target.bit(0):
                raise PreconditionError("copy_p: synchronisation did not reach the target's hub state",
                                        property_name="hub")
            runner.record_variant("copy_p: hub realigned by shift L; shift R; sync")
        copy_cycle(runner, CycleSide.LEFT, target)
        copy_cycle(runner, CycleSide.RIGHT, target)


def copy_p_bound(n: int, m: int) -> int:
    """Shifts, one sync, then at most one flip per non-hub automaton"""
    return 2 * (n + m) - 3


def copy_pair_bound(n: int, m: int) -> Tuple[int, int]:
    """(structural bound, printed bound) for a two-cycle copy"""
    return cycle_copy_bound(n) + cycle_copy_bound(m), 2 * (n + m - 6)
