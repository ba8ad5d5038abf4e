"""
simp: drive a mixed or negative double-cycle to the all-zero configuration
"""

from helper_utilities.constants import CycleSide, NetworkKind
from sequences.base_sequence import BaseSequence
from sequences.runner import SequenceRunner


class SimpSequence(BaseSequence):
    """Filling the left cycle with 1s makes the negated left input block the hub"""

    allowed_kinds = frozenset({NetworkKind.MIXED, NetworkKind.NEGATIVE})

    def get_sequence_name(self) -> str:
        return "simp"

    def apply(self, runner: SequenceRunner) -> None:
        if runner.hub == 1:
            runner.erase(CycleSide.LEFT)
            runner.sync()
        runner.erase(CycleSide.LEFT)
        runner.erase(CycleSide.RIGHT)


def simp_bound(n: int, m: int) -> int:
    return 2 * n + m - 2
