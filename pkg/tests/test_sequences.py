import pytest
from hypothesis import given, settings, strategies as st

from business_services import BadcService, SequenceService
from data_models import Configuration
from helper_utilities.constants import CycleSide
from helper_utilities.exceptions import (
    AutomatonIndexError, NetworkKindError, PreconditionError, UndefinedKappaError
)
from helper_utilities.formatters import TraceFormatter
from sequences.comp_sequence import comp1_bound, comp2_bound, comp_bound
from sequences.copy_sequence import CopyCondition, copy_condition


def pair(dc, x):
    return BadcService.format_configuration(x, dc.spec)


def test_erase_copies_the_hub_along_a_cycle(double_cycle, config_of):
    dc = double_cycle('negative', 4, 2)
    trace = SequenceService.exec(dc, config_of(dc, '(1000,10)'), 'erase L')
    assert pair(dc, trace.final) == '(1111,10)'
    assert (trace.attempted_count, trace.effective_count) == (3, 3)


def test_shift_and_hub_rules(double_cycle, config_of):
    dc = double_cycle('negative', 4, 2)
    trace = SequenceService.exec(dc, config_of(dc, '(0101,01)'), 'shift L')
    assert pair(dc, trace.final) == '(0010,01)'
    with pytest.raises(AutomatonIndexError):
        SequenceService.exec(dc, config_of(dc, '(0101,01)'), 'update R 2')


def test_empty_ranges_do_nothing(double_cycle, config_of):
    dc = double_cycle('negative', 4, 2)
    trace = SequenceService.exec(dc, config_of(dc, '(0101,01)'), 'incUp L 3 2; decUp L 2 1')
    assert trace.attempted_count == 0
    assert pair(dc, trace.final) == '(0101,01)'


def test_comp_chain_on_even_cycles(double_cycle):
    dc = double_cycle('negative', 4, 4)
    zeros = Configuration.zeros(dc.count)
    first = SequenceService.comp1(dc, zeros)
    assert pair(dc, first.final) == '(1010,1111)'
    assert first.certified
    assert first.effective_count <= comp1_bound(4, 4)
    second = SequenceService.comp2(dc, first.final)
    assert pair(dc, second.final) == '(1010,1010)'
    assert second.certified
    assert second.effective_count <= comp2_bound(4, 4)
    whole = SequenceService.comp(dc, zeros)
    assert whole.final == second.final
    assert whole.effective_count == first.effective_count + second.effective_count
    assert whole.effective_count <= comp_bound(4, 4)
    assert BadcService.expressiveness(whole.final, dc.spec) == 4


def test_comp_on_smallest_even_double_cycle(double_cycle):
    dc = double_cycle('negative', 2, 2)
    trace = SequenceService.comp(dc, Configuration.zeros(dc.count))
    assert pair(dc, trace.final) == '(10,10)'


def test_comp_outside_its_proof_is_uncertified(double_cycle, config_of):
    dc = double_cycle('negative', 4, 4)
    trace = SequenceService.comp1(dc, config_of(dc, '(1000,1000)'))
    assert not trace.certified
    assert any('comp1' in note for note in trace.annotations)


@pytest.mark.parametrize('n, m, landing', [
    (3, 2, '(010,01)'),
    (2, 3, '(01,010)'),
    (5, 4, '(01010,0101)'),
    (3, 3, '(011,010)'),
    (5, 3, '(01011,010)'),
    (3, 5, '(011,01010)'),
])
def test_comp_on_odd_cycles_lands_on_the_linking_source(double_cycle, n, m, landing):
    dc = double_cycle('negative', n, m)
    trace = SequenceService.comp(dc, Configuration.zeros(dc.count))
    assert pair(dc, trace.final) == landing
    assert trace.certified
    assert trace.effective_count <= comp_bound(n, m)
    assert trace.replay() == trace.final


def test_comp_records_how_odd_cycles_were_handled(double_cycle):
    zeros = Configuration.zeros(5)
    assert SequenceService.comp(double_cycle('negative', 2, 3), Configuration.zeros(4)).variants == ()
    assert SequenceService.comp(double_cycle('negative', 3, 2), Configuration.zeros(4)).variants == (
        'comp: odd left cycle, comp1 and comp2 run with the cycles exchanged',
    )
    assert SequenceService.comp(double_cycle('negative', 3, 3), zeros).variants == (
        'comp: both cycles odd, the right cycle is built under left rotations',
    )


@pytest.mark.parametrize('n, m, source, image', [
    (3, 2, '(010,01)', '(100,10)'),
    (3, 3, '(011,010)', '(100,100)'),
])
def test_comp_bit_reaches_both_linked_configurations(double_cycle, n, m, source, image):
    dc = double_cycle('negative', n, m)
    zeros = Configuration.zeros(dc.count)
    low = SequenceService.comp_bit(dc, zeros, 0)
    high = SequenceService.comp_bit(dc, zeros, 1)
    assert pair(dc, low.final) == source
    assert pair(dc, high.final) == image
    assert low.certified and high.certified
    assert high.effective_count > low.effective_count


def test_sigma_a_and_its_inverse(double_cycle, config_of):
    dc = double_cycle('negative', 3, 2)
    forward = SequenceService.sigma_a(dc, config_of(dc, '(010,01)'))
    assert pair(dc, forward.final) == '(100,10)'
    assert forward.certified
    back = SequenceService.sigma_a_inv(dc, forward.final)
    assert pair(dc, back.final) == '(010,01)'
    assert back.certified


def test_sigma_b_and_its_inverse(double_cycle, config_of):
    dc = double_cycle('negative', 3, 3)
    forward = SequenceService.sigma_b(dc, config_of(dc, '(011,010)'))
    assert pair(dc, forward.final) == '(100,100)'
    back = SequenceService.sigma_b_inv(dc, forward.final)
    assert pair(dc, back.final) == '(011,010)'


def test_sigma_a_mirrored_onto_the_right_cycle(double_cycle, config_of):
    dc = double_cycle('negative', 2, 3)
    trace = SequenceService.sigma_a(dc, config_of(dc, '(01,010)'))
    assert pair(dc, trace.final) == '(10,100)'
    assert trace.variants == ('sigma_a: mirrored onto the right cycle',)


def test_sigma_with_wrong_parity_is_uncertified(double_cycle):
    dc = double_cycle('negative', 4, 4)
    trace = SequenceService.sigma_a(dc, Configuration.zeros(dc.count))
    assert not trace.certified


def test_fix1(double_cycle, config_of):
    dc = double_cycle('positive', 3, 3)
    trace = SequenceService.fix1(dc, config_of(dc, '(011,010)'))
    assert pair(dc, trace.final) == '(111,111)'


def test_fix0(double_cycle, config_of):
    dc = double_cycle('positive', 3, 3)
    trace = SequenceService.fix0(dc, config_of(dc, '(110,101)'))
    assert pair(dc, trace.final) == '(000,000)'
    assert trace.effective_count == 3
    assert trace.variants == ('fix0: left',)


def test_fix0_falls_back_to_the_right_cycle(double_cycle, config_of):
    dc = double_cycle('positive', 3, 3)
    trace = SequenceService.fix0(dc, config_of(dc, '(111,101)'))
    assert pair(dc, trace.final) == '(000,000)'
    assert trace.variants == ('fix0: right',)


def test_simp(double_cycle, config_of):
    dc = double_cycle('mixed', 2, 2)
    trace = SequenceService.simp(dc, config_of(dc, '(11,10)'))
    assert pair(dc, trace.final) == '(00,00)'


def test_macros_check_the_network_kind(double_cycle):
    dc = double_cycle('negative', 3, 3)
    with pytest.raises(NetworkKindError):
        SequenceService.fix0(dc, Configuration.zeros(dc.count))
    with pytest.raises(NetworkKindError):
        SequenceService.simp(double_cycle('positive', 3, 3), Configuration.zeros(dc.count))


def test_fix1_needs_a_one_in_both_cycles(double_cycle, config_of):
    dc = double_cycle('positive', 3, 3)
    with pytest.raises(PreconditionError) as excinfo:
        SequenceService.fix1(dc, config_of(dc, '(010,000)'))
    assert excinfo.value.property_name == 'has-one-in-both'


def test_copy_needs_the_target_hub(double_cycle, config_of):
    dc = double_cycle('negative', 3, 3)
    with pytest.raises(PreconditionError) as excinfo:
        SequenceService.copy(dc, config_of(dc, '(000,000)'), config_of(dc, '(100,100)'))
    assert excinfo.value.property_name == 'hub'


def test_copy_conditions():
    assert copy_condition((1, 0, 1, 0), (1, 1, 0, 0)) is CopyCondition.ALTERNATING
    assert copy_condition((1, 0, 1, 1), (1, 0, 0, 1)) is CopyCondition.TAIL_MATCHES
    assert copy_condition((1, 0, 1, 1), (1, 1, 1, 0)) is CopyCondition.INNER_DIFFERS
    assert copy_condition((1, 0, 1, 1), (1, 0, 1, 0)) is None
    assert copy_condition((1, 1, 0, 0), (1, 0, 0, 0)) is None


def test_copy_from_alternating(double_cycle, config_of):
    dc = double_cycle('negative', 4, 4)
    target = config_of(dc, '(1001,1100)')
    trace = SequenceService.copy(dc, config_of(dc, '(1010,1010)'), target)
    assert trace.final == target


def test_copy_p_realigns_the_hub(double_cycle, config_of):
    dc = double_cycle('negative', 4, 4)
    target = config_of(dc, '(1011,1100)')
    trace = SequenceService.copy_p(dc, config_of(dc, '(0101,0101)'), target)
    assert trace.final == target
    assert trace.variants == ('copy_p: hub realigned by shift L; shift R; sync',)
    assert trace.effective_count == 10


def test_copy_p_needs_alternating_cycles(double_cycle, config_of):
    dc = double_cycle('negative', 4, 4)
    with pytest.raises(PreconditionError) as excinfo:
        SequenceService.copy_p(dc, config_of(dc, '(0011,0101)'), config_of(dc, '(0000,0000)'))
    assert excinfo.value.property_name == 'alternating'


def test_expand_without_a_stopping_pattern(double_cycle, config_of):
    dc = double_cycle('negative', 3, 3)
    start = config_of(dc, '(111,111)')
    with pytest.raises(UndefinedKappaError):
        SequenceService.exec(dc, start, 'expand L', strict=True)
    trace = SequenceService.exec(dc, start, 'expand L')
    assert trace.final == start
    assert trace.attempted_count == 0
    assert any('skipped' in note for note in trace.annotations)


def test_macro_call_inside_a_program(double_cycle, config_of):
    dc = double_cycle('negative', 3, 2)
    trace = SequenceService.exec(dc, config_of(dc, '(010,01)'), 'sigma_a\nsigma_a_inv')
    assert pair(dc, trace.final) == '(010,01)'


def test_trace_text(double_cycle, config_of):
    dc = double_cycle('negative', 4, 2)
    text = TraceFormatter.to_text(SequenceService.exec(dc, config_of(dc, '(1000,10)'), 'update L 1'), 4, 2)
    assert text.splitlines() == [
        'start (1000,10)',
        '(1, l1, 0→1)',
        'final (1100,10)',
        'attempted 1, effective 1',
    ]


elementary = st.one_of(
    st.just('sync'),
    st.builds(lambda k: f'update L {k}', st.integers(1, 3)),
    st.builds(lambda k: f'update R {k}', st.integers(1, 2)),
    st.builds(lambda c, i, j: f'incUp {c} {i} {j}', st.sampled_from('L'), st.integers(1, 3), st.integers(1, 3)),
    st.builds(lambda c, i, j: f'decUp {c} {i} {j}', st.sampled_from('R'), st.integers(1, 2), st.integers(1, 2)),
    st.builds(lambda op, c: f'{op} {c}', st.sampled_from(['erase', 'expand', 'shift']), st.sampled_from('LR')),
)


@settings(max_examples=80, deadline=None)
@given(value=st.integers(0, 63), statements=st.lists(elementary, max_size=12))
def test_replay_rebuilds_the_final_configuration(value, statements):
    dc = BadcService.build_double_cycle('negative', 4, 3)
    trace = SequenceService.exec(dc, Configuration(value, dc.count), '\n'.join(statements))
    assert trace.replay() == trace.final
    assert trace.final.hamming(trace.start) <= trace.effective_count


@settings(max_examples=60, deadline=None)
@given(value=st.integers(0, 63), kind=st.sampled_from(['positive', 'mixed', 'negative']))
def test_full_inc_up_fills_the_cycle_with_the_hub(value, kind):
    dc = BadcService.build_double_cycle(kind, 4, 3)
    start = Configuration(value, dc.count)
    trace = SequenceService.exec(dc, start, 'incUp L 1 3')
    assert dc.spec.word(trace.final, CycleSide.LEFT) == (start.bit(0),) * 4
    assert dc.spec.word(trace.final, CycleSide.RIGHT) == dc.spec.word(start, CycleSide.RIGHT)
