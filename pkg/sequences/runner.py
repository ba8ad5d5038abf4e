"""
Sequence runner: applies elementary instructions to a live configuration
and records every attempted update
"""

import logging
from typing import Optional, Tuple

from data_models.badc_models import DoubleCycle
from data_models.network_models import Configuration
from data_models.program_models import Trace, TraceBuilder
from helper_utilities.constants import CycleSide
from helper_utilities.exceptions import AutomatonIndexError, LabError, UndefinedKappaError

logger = logging.getLogger(__name__)


class SequenceRunner:
    """
    Executes instructions on one double-cycle starting from one configuration.

    Cycle positions are 0 (the hub) to size - 1. Only sync touches the hub.
    """

    def __init__(self, double_cycle: DoubleCycle, start: Configuration, strict: bool = False):
        if start.size != double_cycle.count:
            raise LabError(
                f"Configuration of size {start.size} does not fit a double-cycle of {double_cycle.count} automata"
            )
        self.double_cycle = double_cycle
        self.spec = double_cycle.spec
        self.network = double_cycle.network
        self.strict = strict
        self.builder = TraceBuilder(start)

    # ------------------------------------------------------------------ state

    @property
    def current(self) -> Configuration:
        return self.builder.current

    @property
    def hub(self) -> int:
        return self.current.bit(0)

    def size(self, side: CycleSide) -> int:
        return self.spec.cycle_size(side)

    def word(self, side: CycleSide) -> Tuple[int, ...]:
        return self.spec.word(self.current, side)

    def state(self, side: CycleSide, position: int) -> int:
        return self.current.bit(self.spec.index(side, position))

    def mark(self) -> int:
        return len(self.builder.updates)

    def annotate(self, note: str) -> None:
        logger.debug(f"Sequence note: {note}")
        self.builder.annotations.append(note)

    def record_variant(self, variant: str) -> None:
        self.builder.variants.append(variant)

    def uncertify(self, reason: str) -> None:
        if self.builder.certified:
            logger.warning(f"[WARNING] Uncertified run: {reason}")
        self.builder.certified = False
        self.annotate(reason)

    def trace(self) -> Trace:
        return self.builder.build()

    # ----------------------------------------------------------- instructions

    def _update_automaton(self, index: int) -> None:
        new = self.network.functions[index].evaluate(self.current.value)
        self.builder.record(index, new)

    def sync(self) -> None:
        self._update_automaton(0)

    def update(self, side: CycleSide, position: int) -> None:
        if not 1 <= position < self.size(side):
            raise AutomatonIndexError(position, self.size(side))
        self._update_automaton(self.spec.index(side, position))

    def inc_up(self, side: CycleSide, first: int, last: int) -> None:
        """Update positions first..last in increasing order; nothing when last < first"""
        for position in range(first, last + 1):
            self.update(side, position)

    def dec_up(self, side: CycleSide, first: int, last: int) -> None:
        """Update positions last..first in decreasing order; nothing when last < first"""
        for position in range(last, first - 1, -1):
            self.update(side, position)

    def erase(self, side: CycleSide) -> None:
        self.inc_up(side, 1, self.size(side) - 1)

    def shift(self, side: CycleSide) -> None:
        self.dec_up(side, 1, self.size(side) - 1)

    def kappa(self, side: CycleSide) -> Optional[int]:
        """
        First position k >= 1 where the cycle's word holds the pattern expand
        stops at: 0 then 1 when the hub is 1, 1 then 0 when the hub is 0.
        The position after the last one wraps to the hub.
        """
        word = self.word(side)
        size = len(word)
        low, high = (0, 1) if self.hub else (1, 0)
        for k in range(1, size):
            if word[k] == low and word[(k + 1) % size] == high:
                return k
        return None

    def expand(self, side: CycleSide) -> None:
        kappa = self.kappa(side)
        if kappa is None:
            message = f"expand {side.value}: no stopping pattern in {''.join(map(str, self.word(side)))}"
            if self.strict:
                raise UndefinedKappaError(message)
            self.annotate(f"{message}; skipped")
            return
        self.inc_up(side, 1, kappa - 1)
