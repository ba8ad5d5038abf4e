import pytest
from hypothesis import given, settings, strategies as st

from business_services import BadcService, DynamicsService
from data_models import BadcSpec, Configuration
from helper_utilities.constants import CycleSide, NetworkKind
from helper_utilities.exceptions import ConfigurationSyntaxError, InvalidSizeError, LabError

sign_words = st.text(alphabet='+-', min_size=1, max_size=3)


def test_layout(double_cycle):
    dc = double_cycle('negative', 4, 3)
    assert dc.count == 6
    assert dc.spec.cycle_indices(CycleSide.LEFT) == (0, 1, 2, 3)
    assert dc.spec.cycle_indices(CycleSide.RIGHT) == (0, 4, 5)


def test_canonical_hub_polarities(double_cycle):
    for kind, polarities in (('positive', (1, 1)), ('mixed', (-1, 1)), ('negative', (-1, -1))):
        hub = double_cycle(kind, 3, 2).network.functions[0]
        assert hub.sources == (2, 3)
        assert hub.polarities == polarities


def test_size_one_cycle_makes_hub_read_itself(double_cycle):
    dc = double_cycle('positive', 1, 3)
    assert dc.network.functions[0].sources[0] == 0
    assert dc.network.reads_itself()


def test_invalid_sizes_and_kinds():
    with pytest.raises(InvalidSizeError):
        BadcService.build_double_cycle('positive', 0, 2)
    with pytest.raises(LabError):
        BadcService.build_double_cycle('neutral', 2, 2)


def test_pair_notation(double_cycle, config_of):
    dc = double_cycle('negative', 4, 2)
    x = config_of(dc, '(1000,10)')
    assert x.value == 1
    assert BadcService.format_configuration(x, dc.spec) == '(1000,10)'
    assert BadcService.format_configuration(config_of(dc, '( 0110 , 01 )'), dc.spec) == '(0110,01)'


@pytest.mark.parametrize('text', ['(100,10)', '(1000,00)', '1000,10', '(10a0,10)', ''])
def test_pair_notation_errors(double_cycle, config_of, text):
    with pytest.raises(ConfigurationSyntaxError):
        config_of(double_cycle('negative', 4, 2), text)


def test_expressiveness(double_cycle, config_of):
    assert BadcService.expressiveness_cycle((0, 1, 0, 1)) == 2
    assert BadcService.expressiveness_cycle((1, 1, 1)) == 0
    assert BadcService.expressiveness_cycle((0, 1)) == 1
    dc = double_cycle('negative', 4, 2)
    assert BadcService.expressiveness(config_of(dc, '(0101,01)'), dc.spec) == 3
    with pytest.raises(LabError):
        BadcService.expressiveness_cycle(())


def test_classify():
    assert BadcService.classify(BadcService.signed_spec('++', '-+-')) is NetworkKind.POSITIVE
    assert BadcService.classify(BadcService.signed_spec('-', '++')) is NetworkKind.MIXED
    assert BadcService.classify(BadcService.signed_spec('+-', '---')) is NetworkKind.NEGATIVE
    with pytest.raises(LabError):
        BadcService.classify(BadcSpec(2, 2, NetworkKind.POSITIVE))


def test_all_positive_signs_need_no_relabeling():
    dc, relabeling = BadcService.canonicalize(BadcService.signed_spec('+++', '++'))
    assert dc.kind is NetworkKind.POSITIVE
    assert relabeling.is_identity


def test_negations_become_flips():
    dc, relabeling = BadcService.canonicalize(BadcService.signed_spec('--+', '+++'))
    assert dc.kind is NetworkKind.POSITIVE
    assert (dc.n, dc.m) == (3, 3)
    assert relabeling.flips == (False, True, False, False, False)
    assert not relabeling.swapped


def test_mixed_with_negative_right_cycle_is_swapped():
    spec = BadcService.signed_spec('++', '-++')
    dc, relabeling = BadcService.canonicalize(spec)
    assert dc.kind is NetworkKind.MIXED
    assert (dc.n, dc.m) == (3, 2)
    assert relabeling.swapped
    assert relabeling.map_automaton(spec.right_index(1)) == dc.spec.left_index(1)
    assert relabeling.map_automaton(spec.left_index(1)) == dc.spec.right_index(1)


def test_canonical_summary():
    summary = BadcService.canonical_summary(BadcService.signed_spec('-+', '+'))
    assert summary['kind'] == 'mixed'
    assert summary['leftSigns'] == '-+'
    assert summary['canonical'] == {'n': 2, 'm': 1}
    assert summary['flips'] == [0, 1]
    assert summary['identity'] is False


def test_parse_sign_spec():
    spec = BadcService.parse_sign_spec('# left then right\n+-+\n++  # right cycle\n')
    assert (spec.n, spec.m) == (3, 2)
    assert spec.left_signs == (1, -1, 1)
    with pytest.raises(LabError):
        BadcService.parse_sign_spec('+-+')
    with pytest.raises(LabError):
        BadcService.parse_sign_spec('+x+ ++')


@settings(max_examples=40, deadline=None)
@given(left=sign_words, right=sign_words)
def test_relabeling_is_a_graph_isomorphism(left, right):
    spec = BadcService.signed_spec(left, right)
    dc, relabeling = BadcService.canonicalize(spec)
    signed_graph = DynamicsService.build_graph(BadcService.build_signed(spec))
    canonical_graph = DynamicsService.build_graph(dc.network)
    mapped = {
        (relabeling.map_value(x), relabeling.map_value(y), relabeling.map_automaton(i))
        for x, y, i in signed_graph.edges()
    }
    assert mapped == set(canonical_graph.edges())


@settings(max_examples=40, deadline=None)
@given(value=st.integers(min_value=0, max_value=31))
def test_relabeling_is_a_bijection(value):
    _, relabeling = BadcService.canonicalize(BadcService.signed_spec('-+-', '+-+'))
    images = {relabeling.map_value(v) for v in range(32)}
    assert len(images) == 32
    assert relabeling.map_config(Configuration(value, 5)).value == relabeling.map_value(value)
