import numpy as np
import pytest

from business_services import DynamicsService, NetworkService
from data_models import LocalFunction, NetworkSpec
from helper_utilities.constants import AttractorKind
from helper_utilities.exceptions import StateSpaceTooLargeError
from helper_utilities.formatters import GraphFormatter


def graph_of(*functions):
    return DynamicsService.build_graph(NetworkSpec(tuple(functions)))


def members(attractors):
    return [a.members for a in attractors]


def test_positive_ring_has_two_fixed_points():
    g = graph_of(LocalFunction.identity(2), LocalFunction.identity(0), LocalFunction.identity(1))
    attractors = DynamicsService.attractors(g)
    assert members(attractors) == [(0,), (7,)]
    assert all(a.kind is AttractorKind.STABLE_CONFIGURATION for a in attractors)


def test_negative_ring_oscillates():
    g = graph_of(LocalFunction.identity(1), LocalFunction.negation(0))
    attractors = DynamicsService.attractors(g)
    assert members(attractors) == [(0, 1, 2, 3)]
    assert attractors[0].kind is AttractorKind.STABLE_OSCILLATION


def test_acyclic_network_has_unique_fixed_point():
    g = graph_of(LocalFunction.constant_false(0), LocalFunction.identity(0), LocalFunction.negation(1))
    assert members(DynamicsService.attractors(g)) == [(4,)]


def test_negative_two_two_is_one_big_oscillation(double_cycle):
    g = DynamicsService.build_graph(double_cycle('negative', 2, 2).network)
    attractors = DynamicsService.attractors(g)
    assert [a.size for a in attractors] == [8]
    assert DynamicsService.convergence(g, attractors).network_time == 0
    assert DynamicsService.transient(g) == frozenset()


def test_mixed_converges_to_zeros(double_cycle):
    g = DynamicsService.build_graph(double_cycle('mixed', 3, 3).network)
    assert members(DynamicsService.attractors(g)) == [(0,)]


def test_positive_two_two_converges_in_one_step(double_cycle):
    g = DynamicsService.build_graph(double_cycle('positive', 2, 2).network)
    assert members(DynamicsService.attractors(g)) == [(0,), (7,)]
    assert DynamicsService.convergence(g).network_time == 1


def test_negative_transient_configurations(double_cycle, config_of):
    dc = double_cycle('negative', 3, 2)
    g = DynamicsService.build_graph(dc.network)
    assert DynamicsService.transient(g) == frozenset({5, 13})
    assert config_of(dc, '(101,10)').value == 5
    assert config_of(dc, '(101,11)').value == 13


def test_irreversibility_check(double_cycle, config_of):
    dc = double_cycle('negative', 3, 3)
    g = DynamicsService.build_graph(dc.network)
    assert DynamicsService.irreversibility_check(g, config_of(dc, '(010,010)').value)
    assert not DynamicsService.irreversibility_check(g, config_of(dc, '(000,000)').value)


def test_irreversible_mask_matches_single_checks(double_cycle):
    g = DynamicsService.build_graph(double_cycle('negative', 3, 2).network)
    mask = DynamicsService.irreversible_mask(g)
    expected = [DynamicsService.irreversibility_check(g, x) for x in range(g.state_count)]
    assert mask.tolist() == expected
    assert set(np.flatnonzero(mask).tolist()) == {5, 13}


def test_parallel_build_matches_sequential(double_cycle):
    net = double_cycle('negative', 4, 3).network
    sequential = DynamicsService.build_graph(net)
    parallel = DynamicsService.build_graph(net, workers=4)
    assert np.array_equal(sequential.offsets, parallel.offsets)
    assert np.array_equal(sequential.targets, parallel.targets)
    assert np.array_equal(sequential.automata, parallel.automata)


def test_every_edge_flips_its_automaton(double_cycle):
    net = double_cycle('mixed', 3, 2).network
    g = DynamicsService.build_graph(net)
    for x, y, automaton in g.edges():
        assert x ^ y == 1 << automaton
        assert net.functions[automaton].evaluate(x) != (x >> automaton) & 1


def test_fixed_point_has_no_successors(double_cycle):
    g = DynamicsService.build_graph(double_cycle('positive', 3, 2).network)
    assert g.out_degree(0) == 0
    assert g.out_degree(g.state_count - 1) == 0


def test_distance_and_reachability(double_cycle):
    g = DynamicsService.build_graph(double_cycle('negative', 2, 2).network)
    assert DynamicsService.distance(g, 0, 0) == 0
    assert DynamicsService.distance(g, 0, 1) == 1
    assert DynamicsService.distances_from(g, 0)[1] == 1
    fixed = DynamicsService.build_graph(double_cycle('positive', 2, 2).network)
    assert DynamicsService.distance(fixed, 0, 7) is None
    assert not DynamicsService.reachable(fixed, 0, 7)


def test_state_space_cap(double_cycle):
    with pytest.raises(StateSpaceTooLargeError):
        DynamicsService.build_graph(double_cycle('positive', 4, 4).network, cap=5)
    NetworkService.check_enumerable(double_cycle('positive', 3, 3).network, cap=5)


def test_summary(double_cycle):
    g = DynamicsService.build_graph(double_cycle('negative', 3, 2).network)
    summary = DynamicsService.summarize(g, 'negative', 3, 2)
    assert len(summary['attractors']) == 1
    assert summary['attractors'][0]['size'] == 14
    assert summary['transientCount'] == 2


def test_dot_export(double_cycle):
    g = DynamicsService.build_graph(double_cycle('negative', 2, 2).network)
    text = GraphFormatter.render(g, 2, 2, DynamicsService.recurrent(g))
    assert text.startswith('digraph transitions {')
    assert text.count('fillcolor=') == 8
    assert text.count(' -> ') == g.edge_count
    assert '"(00,00)"' in text


def test_graph_chunks_match_a_single_pass(double_cycle):
    net = double_cycle('negative', 4, 3).network
    whole = DynamicsService._build_chunk(net, 0, 64)
    chunked = DynamicsService._build_slice(net, 0, 64, chunk=5)
    for expected, actual in zip(whole, chunked):
        assert np.array_equal(expected, actual)
    empty = DynamicsService._build_slice(net, 8, 8, chunk=5)
    assert [len(part) for part in empty] == [0, 0, 0]
