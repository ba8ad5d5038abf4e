from functools import lru_cache

from hypothesis import given, settings, strategies as st

from business_services import BadcService, DynamicsService, NetworkService, SequenceService
from data_models import Configuration
from helper_utilities.constants import CycleSide

SIZES = {CycleSide.LEFT: 4, CycleSide.RIGHT: 3}


@lru_cache(maxsize=None)
def negative_double_cycle():
    return BadcService.build_double_cycle('negative', SIZES[CycleSide.LEFT], SIZES[CycleSide.RIGHT])


@lru_cache(maxsize=None)
def transition_graph():
    return DynamicsService.build_graph(negative_double_cycle().network)


def cycle_expressiveness(x, side):
    return BadcService.expressiveness_cycle(negative_double_cycle().spec.word(x, side))


def run(value, program):
    dc = negative_double_cycle()
    return SequenceService.exec(dc, Configuration(value, dc.count), program)


states = st.integers(0, 63)
sides = st.sampled_from([CycleSide.LEFT, CycleSide.RIGHT])
hub_free = st.one_of(
    st.builds(lambda k: f'update L {k}', st.integers(1, 3)),
    st.builds(lambda k: f'update R {k}', st.integers(1, 2)),
    st.builds(lambda i, j: f'incUp L {i} {j}', st.integers(1, 3), st.integers(1, 3)),
    st.builds(lambda i, j: f'decUp R {i} {j}', st.integers(1, 2), st.integers(1, 2)),
    st.builds(lambda op, c: f'{op} {c}', st.sampled_from(['erase', 'expand', 'shift']), st.sampled_from('LR')),
)


@settings(max_examples=80, deadline=None)
@given(value=states, statements=st.lists(hub_free, min_size=1, max_size=10))
def test_only_sync_moves_the_hub(value, statements):
    trace = run(value, '\n'.join(statements))
    assert trace.final.bit(0) == trace.start.bit(0)
    assert all(record.automaton != 0 for record in trace.updates)


@given(value=states)
def test_sync_alone_touches_only_the_hub(value):
    trace = run(value, 'sync')
    assert trace.final.value >> 1 == trace.start.value >> 1


@given(value=states, side=sides)
def test_erase_leaves_no_pattern(value, side):
    trace = run(value, f'erase {side.value}')
    assert cycle_expressiveness(trace.final, side) == 0
    assert cycle_expressiveness(trace.final, side.other) == cycle_expressiveness(trace.start, side.other)


@given(value=states, side=sides)
def test_shift_loses_at_most_one_pattern(value, side):
    trace = run(value, f'shift {side.value}')
    before = cycle_expressiveness(trace.start, side)
    assert before - 1 <= cycle_expressiveness(trace.final, side) <= before


@given(value=states, side=sides)
def test_expand_never_loses_a_pattern(value, side):
    trace = run(value, f'expand {side.value}')
    assert cycle_expressiveness(trace.final, side) >= cycle_expressiveness(trace.start, side)


@given(word=st.lists(st.integers(0, 1), min_size=1, max_size=12), turn=st.integers(0, 12))
def test_expressiveness_ignores_rotation(word, turn):
    k = turn % len(word)
    assert BadcService.expressiveness_cycle(word[k:] + word[:k]) == BadcService.expressiveness_cycle(word)


@settings(deadline=None)
@given(x=states, y=states, z=states)
def test_distance_is_a_quasi_metric(x, y, z):
    g = transition_graph()
    assert DynamicsService.distance(g, x, x) == 0
    xy = DynamicsService.distance(g, x, y)
    if x != y:
        assert xy is None or xy >= 1
    yz = DynamicsService.distance(g, y, z)
    if xy is not None and yz is not None:
        xz = DynamicsService.distance(g, x, z)
        assert xz is not None and xz <= xy + yz


def test_configurations_and_integers_correspond_one_to_one():
    size = 6
    seen = set()
    for value in range(1 << size):
        x = Configuration(value, size)
        assert int(x) == value
        assert Configuration.from_bits(x.bits()) == x
        seen.add(x.bits())
    assert len(seen) == 1 << size


@given(value=states, i=st.integers(0, 5))
def test_async_step_is_idempotent(value, i):
    dc = negative_double_cycle()
    once = NetworkService.async_step(dc.network, Configuration(value, dc.count), i)
    assert NetworkService.async_step(dc.network, once, i) == once
