import pytest
from hypothesis import given, settings, strategies as st

from business_services import BadcService, NetworkService
from data_models import Configuration, LocalFunction, NetworkSpec, SignedArc
from helper_utilities.exceptions import AutomatonIndexError, LabError, StateSpaceTooLargeError


def chain(*functions):
    return NetworkSpec(tuple(functions))


def test_configuration_bits():
    x = Configuration.from_bits([1, 0, 1])
    assert x.value == 5
    assert x.bits() == (1, 0, 1)
    assert x.with_bit(1, 1).value == 7
    assert x.flipped(0).value == 4
    assert x.hamming(Configuration.zeros(3)) == 2


def test_configuration_rejects_out_of_range():
    with pytest.raises(LabError):
        Configuration(8, 3)
    with pytest.raises(AutomatonIndexError):
        Configuration.zeros(3).bit(3)


def test_constant_false_never_fires():
    f = LocalFunction.constant_false(0)
    assert [f.evaluate(v) for v in range(4)] == [0, 0, 0, 0]


def test_eval_local_and_async_step(double_cycle):
    dc = double_cycle('negative', 2, 2)
    zeros = Configuration.zeros(3)
    assert NetworkService.eval_local(dc.network, zeros, 0) is True
    assert NetworkService.async_step(dc.network, zeros, 0).value == 1
    assert NetworkService.async_step(dc.network, zeros, 1) == zeros
    with pytest.raises(AutomatonIndexError):
        NetworkService.eval_local(dc.network, zeros, 3)


def test_interaction_graph_of_canonical_forms(double_cycle):
    positive = NetworkService.interaction_graph(double_cycle('positive', 2, 2).network)
    assert positive == {SignedArc(0, 1, 1), SignedArc(0, 2, 1), SignedArc(1, 0, 1), SignedArc(2, 0, 1)}
    negative = NetworkService.interaction_graph(double_cycle('negative', 2, 2).network)
    assert SignedArc(1, 0, -1) in negative and SignedArc(2, 0, -1) in negative


def test_constant_has_no_interaction():
    assert NetworkService.interaction_graph(chain(LocalFunction.constant_false(0))) == frozenset()


def test_enumeration_cap():
    net = chain(LocalFunction.identity(2), LocalFunction.identity(0), LocalFunction.identity(1))
    with pytest.raises(StateSpaceTooLargeError):
        NetworkService.interaction_graph(net, cap=2)


def test_cycle_signs():
    positive_ring = chain(LocalFunction.identity(2), LocalFunction.identity(0), LocalFunction.identity(1))
    negative_ring = chain(LocalFunction.identity(1), LocalFunction.negation(0))
    acyclic = chain(LocalFunction.constant_false(0), LocalFunction.identity(0), LocalFunction.negation(1))
    assert NetworkService.cycle_signs(NetworkService.interaction_graph(positive_ring)) == {1}
    assert NetworkService.cycle_signs(NetworkService.interaction_graph(negative_ring)) == {-1}
    assert NetworkService.cycle_signs(NetworkService.interaction_graph(acyclic)) == set()


def test_double_cycle_has_both_cycle_signs_when_mixed(double_cycle):
    arcs = NetworkService.interaction_graph(double_cycle('mixed', 3, 3).network)
    assert NetworkService.positive_cycle_exists(arcs)
    assert NetworkService.negative_cycle_exists(arcs)


@settings(max_examples=60, deadline=None)
@given(value=st.integers(min_value=0, max_value=(1 << 6) - 1))
def test_interaction_sign_agrees_with_arcs(value):
    dc = BadcService.build_double_cycle("negative", 4, 3)
    arcs = {(arc.source, arc.target): arc.sign for arc in NetworkService.interaction_graph(dc.network)}
    x = Configuration(value, dc.count)
    for j in range(dc.count):
        for i in range(dc.count):
            sign = NetworkService.interaction_sign(dc.network, x, j, i)
            assert sign in (0, arcs.get((j, i), 0))
