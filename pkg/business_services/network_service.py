"""
Network service: local evaluation, asynchronous steps and interaction signs
"""

import logging
from typing import FrozenSet, Iterable, List, Set

import networkx as nx
import numpy as np

from data_models.network_models import Configuration, NetworkSpec, SignedArc
from helper_utilities.constants import LabConstants
from helper_utilities.exceptions import NonSimpleNetworkError, StateSpaceTooLargeError

logger = logging.getLogger(__name__)


class NetworkService:
    """Service class for operations on Boolean automata networks"""

    @staticmethod
    def check_enumerable(net: NetworkSpec, cap: int = LabConstants.DEFAULT_ENUMERATION_CAP) -> None:
        if net.count > cap:
            raise StateSpaceTooLargeError(net.count, cap)

    @staticmethod
    def all_states(count: int) -> np.ndarray:
        return np.arange(1 << count, dtype=np.int64)

    @staticmethod
    def eval_local(net: NetworkSpec, x: Configuration, i: int) -> bool:
        """f_i(x)"""
        net.check_index(i)
        net.check_configuration(x)
        return bool(net.functions[i].evaluate(x.value))

    @staticmethod
    def async_step(net: NetworkSpec, x: Configuration, i: int) -> Configuration:
        """Update automaton i alone"""
        net.check_index(i)
        net.check_configuration(x)
        return x.with_bit(i, net.functions[i].evaluate(x.value))

    @staticmethod
    def interaction_sign(net: NetworkSpec, x: Configuration, j: int, i: int) -> int:
        """s(x_j) * (f_i(x) - f_i(x with bit j flipped)), in {-1, 0, +1}"""
        net.check_index(i)
        net.check_index(j)
        net.check_configuration(x)
        function = net.functions[i]
        s = 1 if x.bit(j) else -1
        return s * (function.evaluate(x.value) - function.evaluate(x.value ^ (1 << j)))

    @staticmethod
    def interaction_graph(net: NetworkSpec,
                          cap: int = LabConstants.DEFAULT_ENUMERATION_CAP) -> FrozenSet[SignedArc]:
        """
        Every interaction j -> i whose sign is nonzero for some configuration.

        Only the sources of f_i can influence it, so only those pairs are
        enumerated. A pair showing both signs makes the network non-simple.
        """
        NetworkService.check_enumerable(net, cap)
        states = NetworkService.all_states(net.count)
        arcs: Set[SignedArc] = set()
        for i, function in enumerate(net.functions):
            values = function.evaluate_many(states)
            for j in sorted(set(function.sources)):
                flipped = function.evaluate_many(states ^ (1 << j))
                s = 2 * ((states >> j) & 1) - 1
                signs = s * (values - flipped)
                has_positive = bool(np.any(signs > 0))
                has_negative = bool(np.any(signs < 0))
                if has_positive and has_negative:
                    raise NonSimpleNetworkError(j, i)
                if has_positive or has_negative:
                    arcs.add(SignedArc(j, i, 1 if has_positive else -1))
        logger.debug(f"Interaction graph of {net.count} automata has {len(arcs)} arcs")
        return frozenset(arcs)

    @staticmethod
    def cycle_signs(arcs: Iterable[SignedArc]) -> Set[int]:
        """Sign products of all simple cycles of the signed graph"""
        graph = nx.DiGraph()
        for arc in arcs:
            graph.add_edge(arc.source, arc.target, sign=arc.sign)
        products: Set[int] = set()
        for cycle in nx.simple_cycles(graph):
            product = 1
            for k, node in enumerate(cycle):
                product *= graph[node][cycle[(k + 1) % len(cycle)]]['sign']
            products.add(product)
            if len(products) == 2:
                break
        return products

    @staticmethod
    def positive_cycle_exists(arcs: Iterable[SignedArc]) -> bool:
        return 1 in NetworkService.cycle_signs(arcs)

    @staticmethod
    def negative_cycle_exists(arcs: Iterable[SignedArc]) -> bool:
        return -1 in NetworkService.cycle_signs(arcs)

    @staticmethod
    def sorted_arcs(arcs: Iterable[SignedArc]) -> List[SignedArc]:
        return sorted(arcs, key=lambda arc: (arc.target, arc.source))
