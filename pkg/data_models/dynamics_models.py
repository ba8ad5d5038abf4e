"""
Transition graph, attractor and convergence value types
"""

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np

from helper_utilities.constants import AttractorKind


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    """
    Effective asynchronous transitions of a network, stored in CSR form.

    The successors of configuration x are targets[offsets[x]:offsets[x + 1]],
    reached by updating automata[offsets[x]:offsets[x + 1]]. Edges are ordered
    by (configuration, automaton index).
    """

    automaton_count: int
    offsets: np.ndarray
    targets: np.ndarray
    automata: np.ndarray
    _reverse: List[Optional[Tuple[np.ndarray, np.ndarray]]] = field(
        default_factory=lambda: [None], repr=False
    )

    @property
    def state_count(self) -> int:
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:
        return len(self.targets)

    def successors(self, x: int) -> np.ndarray:
        return self.targets[self.offsets[x]:self.offsets[x + 1]]

    def labelled_successors(self, x: int) -> List[Tuple[int, int]]:
        """(successor, updated automaton) pairs of x"""
        lo, hi = self.offsets[x], self.offsets[x + 1]
        return [(int(y), int(i)) for y, i in zip(self.targets[lo:hi], self.automata[lo:hi])]

    def out_degree(self, x: int) -> int:
        return int(self.offsets[x + 1] - self.offsets[x])

    def sources(self) -> np.ndarray:
        """Source configuration of every edge, aligned with targets"""
        return np.repeat(np.arange(self.state_count, dtype=np.int64), np.diff(self.offsets))

    def edges(self) -> Iterator[Tuple[int, int, int]]:
        for x in range(self.state_count):
            lo, hi = self.offsets[x], self.offsets[x + 1]
            for k in range(lo, hi):
                yield x, int(self.targets[k]), int(self.automata[k])

    def predecessors(self, y: int) -> np.ndarray:
        offsets, sources = self.reverse()
        return sources[offsets[y]:offsets[y + 1]]

    def reverse(self) -> Tuple[np.ndarray, np.ndarray]:
        """Reverse adjacency (offsets, sources), built once on first use"""
        if self._reverse[0] is None:
            order = np.argsort(self.targets, kind="stable")
            counts = np.bincount(self.targets, minlength=self.state_count)
            offsets = np.zeros(self.state_count + 1, dtype=np.int64)
            np.cumsum(counts, out=offsets[1:])
            self._reverse[0] = (offsets, self.sources()[order])
        return self._reverse[0]


@dataclass(frozen=True)
class Attractor:
    """A terminal strongly connected component, members sorted ascending"""

    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def kind(self) -> AttractorKind:
        if self.size == 1:
            return AttractorKind.STABLE_CONFIGURATION
        return AttractorKind.STABLE_OSCILLATION

    def __contains__(self, value: int) -> bool:
        position = bisect_left(self.members, value)
        return position < len(self.members) and self.members[position] == value


@dataclass(frozen=True, eq=False)
class ConvergenceReport:
    """Shortest distance from every configuration to the recurrent set"""

    per_config: np.ndarray

    @property
    def network_time(self) -> int:
        return int(self.per_config.max()) if len(self.per_config) else 0

    def time_of(self, x: int) -> int:
        return int(self.per_config[x])
