"""
Dynamics service: asynchronous transition graphs, strongly connected
components, attractors, reachability and convergence times
"""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from business_services.network_service import NetworkService
from data_models.dynamics_models import Attractor, ConvergenceReport, TransitionGraph
from data_models.network_models import NetworkSpec
from helper_utilities.constants import LabConstants
from helper_utilities.formatters import ReportFormatter

logger = logging.getLogger(__name__)

UNREACHABLE = -1


class DynamicsService:
    """Service class for exhaustive asynchronous dynamics"""

    @staticmethod
    def _build_chunk(net: NetworkSpec, lo: int, hi: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edges leaving configurations lo..hi-1, ordered by (configuration, automaton)"""
        states = np.arange(lo, hi, dtype=np.int64)
        successors = np.empty((hi - lo, net.count), dtype=np.int64)
        for i, function in enumerate(net.functions):
            current = (states >> i) & 1
            changed = function.evaluate_many(states) != current
            successors[:, i] = np.where(changed, states ^ (1 << i), UNREACHABLE)
        mask = successors != UNREACHABLE
        counts = mask.sum(axis=1)
        automata = np.broadcast_to(np.arange(net.count, dtype=np.int16), successors.shape)[mask]
        return counts, successors[mask], automata

    @staticmethod
    def _build_slice(net: NetworkSpec, lo: int, hi: int,
                     chunk: int = LabConstants.GRAPH_CHUNK_STATES) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """_build_chunk over lo..hi-1, at most `chunk` configurations at a time"""
        parts = [DynamicsService._build_chunk(net, start, min(start + chunk, hi)) for start in range(lo, hi, chunk)]
        if not parts:
            return DynamicsService._build_chunk(net, lo, lo)
        return tuple(np.concatenate([p[k] for p in parts]) for k in range(3))

    @staticmethod
    def build_graph(net: NetworkSpec, cap: int = LabConstants.DEFAULT_ENUMERATION_CAP,
                    workers: int = 1) -> TransitionGraph:
        """
        Every effective asynchronous transition of `net`.

        With workers > 1 the configuration range is cut into contiguous slices
        built concurrently; slices are concatenated in range order so the
        result is identical to the sequential build.
        """
        NetworkService.check_enumerable(net, cap)
        state_count = 1 << net.count
        workers = max(1, min(workers, state_count))
        bounds = np.linspace(0, state_count, workers + 1, dtype=np.int64)
        slices = [(int(bounds[k]), int(bounds[k + 1])) for k in range(workers)]

        if workers == 1:
            parts = [DynamicsService._build_slice(net, 0, state_count)]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                parts = list(executor.map(lambda s: DynamicsService._build_slice(net, *s), slices))

        counts = np.concatenate([p[0] for p in parts])
        offsets = np.zeros(state_count + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        graph = TransitionGraph(
            automaton_count=net.count,
            offsets=offsets,
            targets=np.concatenate([p[1] for p in parts]),
            automata=np.concatenate([p[2] for p in parts]),
        )
        logger.debug(f"Built transition graph: {state_count} configurations, {graph.edge_count} edges")
        return graph

    @staticmethod
    def strongly_connected_components(g: TransitionGraph) -> List[List[int]]:
        """
        Tarjan's algorithm with an explicit recursion stack.

        Components come out in topological order of the condensation.
        """
        BEGIN, CONTINUE, RETURN = 0, 1, 2
        size = g.state_count
        offsets = g.offsets.tolist()
        targets = g.targets.tolist()
        indices = [0] * size
        lowlinks = [0] * size
        on_stack = [False] * size
        stack: List[int] = []
        sccs: List[List[int]] = []
        current_index = 0

        for root in range(size):
            if indices[root]:
                continue
            iter_stack = [(root, None, BEGIN)]
            while iter_stack:
                v, succ_index, state = iter_stack.pop()
                if state == BEGIN:
                    current_index += 1
                    indices[v] = current_index
                    lowlinks[v] = current_index
                    on_stack[v] = True
                    stack.append(v)
                    iter_stack.append((v, offsets[v], CONTINUE))
                elif state == CONTINUE:
                    if succ_index == offsets[v + 1]:
                        if lowlinks[v] == indices[v]:
                            scc = []
                            while True:
                                w = stack.pop()
                                on_stack[w] = False
                                scc.append(w)
                                if w == v:
                                    break
                            sccs.append(scc)
                    else:
                        w = targets[succ_index]
                        if not indices[w]:
                            iter_stack.append((v, succ_index, RETURN))
                            iter_stack.append((w, None, BEGIN))
                        else:
                            if on_stack[w]:
                                lowlinks[v] = min(lowlinks[v], indices[w])
                            iter_stack.append((v, succ_index + 1, CONTINUE))
                else:
                    w = targets[succ_index]
                    lowlinks[v] = min(lowlinks[v], lowlinks[w])
                    iter_stack.append((v, succ_index + 1, CONTINUE))
        sccs.reverse()
        return sccs

    @staticmethod
    def attractors(g: TransitionGraph) -> List[Attractor]:
        """Terminal SCCs, sorted by smallest member"""
        sccs = DynamicsService.strongly_connected_components(g)
        component = np.empty(g.state_count, dtype=np.int64)
        for number, scc in enumerate(sccs):
            component[scc] = number
        source_components = component[g.sources()]
        target_components = component[g.targets]
        leaving = np.unique(source_components[source_components != target_components])
        terminal = np.ones(len(sccs), dtype=bool)
        terminal[leaving] = False
        result = [Attractor(tuple(sorted(sccs[k]))) for k in np.flatnonzero(terminal)]
        result.sort(key=lambda attractor: attractor.members[0])
        return result

    @staticmethod
    def recurrent_mask(g: TransitionGraph, attractors: Optional[List[Attractor]] = None) -> np.ndarray:
        mask = np.zeros(g.state_count, dtype=bool)
        for attractor in attractors if attractors is not None else DynamicsService.attractors(g):
            mask[list(attractor.members)] = True
        return mask

    @staticmethod
    def recurrent(g: TransitionGraph) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(DynamicsService.recurrent_mask(g)).tolist())

    @staticmethod
    def transient(g: TransitionGraph) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(~DynamicsService.recurrent_mask(g)).tolist())

    @staticmethod
    def distances_from(g: TransitionGraph, x: int) -> np.ndarray:
        """BFS distance from x to every configuration, -1 when unreachable"""
        distances = np.full(g.state_count, UNREACHABLE, dtype=np.int64)
        offsets = g.offsets
        targets = g.targets
        distances[x] = 0
        queue = deque([x])
        while queue:
            v = queue.popleft()
            next_distance = distances[v] + 1
            for w in targets[offsets[v]:offsets[v + 1]].tolist():
                if distances[w] == UNREACHABLE:
                    distances[w] = next_distance
                    queue.append(w)
        return distances

    @staticmethod
    def distance(g: TransitionGraph, x: int, y: int) -> Optional[int]:
        """Length of a shortest trajectory from x to y, None if there is none"""
        if x == y:
            return 0
        seen = {x}
        frontier = [x]
        depth = 0
        while frontier:
            depth += 1
            next_frontier = []
            for v in frontier:
                for w in g.successors(v).tolist():
                    if w == y:
                        return depth
                    if w not in seen:
                        seen.add(w)
                        next_frontier.append(w)
            frontier = next_frontier
        return None

    @staticmethod
    def reachable(g: TransitionGraph, x: int, y: int) -> bool:
        return DynamicsService.distance(g, x, y) is not None

    @staticmethod
    def convergence(g: TransitionGraph, attractors: Optional[List[Attractor]] = None) -> ConvergenceReport:
        """Multi-source BFS from the recurrent set along reversed edges"""
        recurrent = DynamicsService.recurrent_mask(g, attractors)
        distances = np.full(g.state_count, UNREACHABLE, dtype=np.int64)
        distances[recurrent] = 0
        queue = deque(np.flatnonzero(recurrent).tolist())
        reverse_offsets, reverse_sources = g.reverse()
        while queue:
            y = queue.popleft()
            next_distance = distances[y] + 1
            for x in reverse_sources[reverse_offsets[y]:reverse_offsets[y + 1]].tolist():
                if distances[x] == UNREACHABLE:
                    distances[x] = next_distance
                    queue.append(x)
        return ConvergenceReport(distances)

    @staticmethod
    def irreversibility_check(g: TransitionGraph, x: int, recurrent: Optional[np.ndarray] = None) -> bool:
        """x is transient and no effective successor of x leads back to x"""
        if recurrent is None:
            recurrent = DynamicsService.recurrent_mask(g)
        if recurrent[x]:
            return False
        seen = set()
        frontier = g.successors(x).tolist()
        seen.update(frontier)
        while frontier:
            if x in seen:
                return False
            next_frontier = []
            for v in frontier:
                for w in g.successors(v).tolist():
                    if w not in seen:
                        seen.add(w)
                        next_frontier.append(w)
            frontier = next_frontier
        return x not in seen

    @staticmethod
    def irreversible_mask(g: TransitionGraph) -> np.ndarray:
        """
        irreversibility_check for every configuration at once: a successor of
        x leads back to x exactly when x lies in a non-trivial SCC
        """
        sccs = DynamicsService.strongly_connected_components(g)
        trivial = np.zeros(g.state_count, dtype=bool)
        for scc in sccs:
            if len(scc) == 1:
                trivial[scc[0]] = True
        return trivial & ~DynamicsService.recurrent_mask(g)

    @staticmethod
    def summarize(g: TransitionGraph, kind: str, n: int, m: int) -> Dict:
        """Attractor report of a double-cycle's transition graph"""
        attractors = DynamicsService.attractors(g)
        recurrent = DynamicsService.recurrent_mask(g, attractors)
        convergence = DynamicsService.convergence(g, attractors)
        return ReportFormatter.dynamics_dict(
            kind, n, m, attractors,
            transient_count=int(g.state_count - recurrent.sum()),
            network_time=convergence.network_time,
        )
