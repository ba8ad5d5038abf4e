"""
Sequences driving positive double-cycles onto their stable configurations
"""

from typing import List

from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import PreconditionError
from sequences.base_sequence import BaseSequence
from sequences.runner import SequenceRunner


def _positions(runner: SequenceRunner, side: CycleSide, state: int) -> List[int]:
    word = runner.word(side)
    return [k for k in range(1, len(word)) if word[k] == state]


class FixZeroSequence(BaseSequence):
    """
    fix0: reach the all-zero configuration.

    With the hub at 1, the first 0 of the left cycle is propagated to the
    cycle's end so that sync drops the hub. If the left cycle holds no 0, the
    same is done on the right cycle and the trace records that variant.
    """

    allowed_kinds = frozenset({NetworkKind.POSITIVE})

    def get_sequence_name(self) -> str:
        return "fix0"

    def apply(self, runner: SequenceRunner) -> None:
        if runner.hub == 1:
            left_zeros = _positions(runner, CycleSide.LEFT, 0)
            if left_zeros:
                runner.inc_up(CycleSide.LEFT, left_zeros[0] + 1, runner.size(CycleSide.LEFT) - 1)
                runner.record_variant("fix0: left")
            else:
                right_zeros = _positions(runner, CycleSide.RIGHT, 0)
                if not right_zeros:
                    raise PreconditionError("fix0 needs at least one automaton at 0", property_name="has-zero")
                runner.inc_up(CycleSide.RIGHT, right_zeros[0] + 1, runner.size(CycleSide.RIGHT) - 1)
                runner.record_variant("fix0: right")
            runner.sync()
        runner.erase(CycleSide.LEFT)
        runner.erase(CycleSide.RIGHT)


class FixOneSequence(BaseSequence):
    """fix1: reach the all-one configuration"""

    allowed_kinds = frozenset({NetworkKind.POSITIVE})

    def get_sequence_name(self) -> str:
        return "fix1"

    def apply(self, runner: SequenceRunner) -> None:
        if runner.hub == 0:
            left_ones = _positions(runner, CycleSide.LEFT, 1)
            right_ones = _positions(runner, CycleSide.RIGHT, 1)
            if not left_ones or not right_ones:
                raise PreconditionError("fix1 needs an automaton at 1 in both cycles",
                                        property_name="has-one-in-both")
            runner.inc_up(CycleSide.LEFT, left_ones[0] + 1, runner.size(CycleSide.LEFT) - 1)
            runner.inc_up(CycleSide.RIGHT, right_ones[0] + 1, runner.size(CycleSide.RIGHT) - 1)
            runner.sync()
        runner.erase(CycleSide.LEFT)
        runner.erase(CycleSide.RIGHT)


def fix0_bound(n: int, m: int, variant: str = "fix0: left") -> int:
    if variant == "fix0: right":
        return 2 * m + n - 3
    return 2 * n + m - 3


def fix1_bound(n: int, m: int) -> int:
    return 2 * (n + m) - 5
