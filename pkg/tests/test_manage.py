import io
import json

import pytest

import manage
from helper_utilities.constants import ExitCode


def run_cli(*argv):
    out = io.StringIO()
    code = manage.main(['--config', 'testing', *argv], out=out)
    return code, out.getvalue()


def test_attractors_text():
    code, text = run_cli('attractors', '--kind', 'negative', '-n', '2', '-m', '2')
    assert code == ExitCode.SUCCESS
    lines = text.splitlines()
    assert lines[0] == 'negative double-cycle n=2 m=2: 1 attractor'
    assert lines[1].startswith('  size 8, oscillation: (00,00), (10,10)')
    assert 'transient configurations: 0' in lines
    assert 'network convergence time: 0' in lines


def test_attractors_json():
    code, text = run_cli('attractors', '--kind', 'positive', '-n', '3', '-m', '2', '--format', 'json')
    assert code == ExitCode.SUCCESS
    data = json.loads(text)
    assert data['schemaVersion'] == 1
    assert [a['sampleMembers'] for a in data['attractors']] == [['(000,00)'], ['(111,11)']]


def test_attractors_dot():
    code, text = run_cli('attractors', '--kind', 'mixed', '-n', '2', '-m', '2', '--format', 'dot')
    assert code == ExitCode.SUCCESS
    assert text.startswith('digraph transitions {')
    assert text.count('fillcolor=') == 1


def test_export_to_file(tmp_path):
    target = tmp_path / 'graph.dot'
    code, text = run_cli('export', '--kind', 'negative', '-n', '3', '-m', '2', '--output', str(target))
    assert code == ExitCode.SUCCESS
    assert text == ''
    assert target.read_text(encoding='utf-8').count('fillcolor=') == 14


def test_enumeration_cap_is_a_usage_error():
    code, _ = run_cli('attractors', '--kind', 'negative', '-n', '4', '-m', '4', '--cap', '5')
    assert code == ExitCode.USAGE_ERROR


def test_run_program():
    code, text = run_cli('run', '--kind', 'negative', '-n', '4', '-m', '2',
                         '--start', '(1000,10)', '--program', 'erase L')
    assert code == ExitCode.SUCCESS
    assert 'final (1111,10)' in text
    assert 'attempted 3, effective 3' in text


def test_run_program_file_json(tmp_path):
    program = tmp_path / 'linking.prog'
    program.write_text('# linking pair\nsigma_a\n', encoding='utf-8')
    code, text = run_cli('run', '--kind', 'negative', '-n', '3', '-m', '2',
                         '--start', '(010,01)', '--prog', str(program), '--format', 'json')
    assert code == ExitCode.SUCCESS
    data = json.loads(text)
    assert data['final'] == '(100,10)'
    assert data['certified'] is True


def test_run_certify_fails_outside_the_proof():
    code, text = run_cli('run', '--kind', 'negative', '-n', '4', '-m', '4',
                         '--start', '(1000,1000)', '--program', 'comp1', '--certify')
    assert code == ExitCode.VERIFICATION_FAILED
    assert 'uncertified' in text


def test_run_errors_exit_two(capsys):
    code, _ = run_cli('run', '--kind', 'negative', '-n', '4', '-m', '2',
                      '--start', '(1000,10)', '--program', 'update L 0')
    assert code == ExitCode.USAGE_ERROR
    assert 'line 1, column 10' in capsys.readouterr().err
    code, _ = run_cli('run', '--kind', 'negative', '-n', '4', '-m', '2',
                      '--start', '(100,10)', '--program', 'sync')
    assert code == ExitCode.USAGE_ERROR
    code, _ = run_cli('run', '--kind', 'negative', '-n', '3', '-m', '3',
                      '--start', '(111,111)', '--program', 'expand L', '--strict')
    assert code == ExitCode.USAGE_ERROR


def test_argument_errors_exit_two():
    assert run_cli('attractors', '--kind', 'negative', '-n', '0', '-m', '2')[0] == ExitCode.USAGE_ERROR
    assert run_cli('attractors', '--kind', 'neutral', '-n', '2', '-m', '2')[0] == ExitCode.USAGE_ERROR
    assert run_cli('bogus')[0] == ExitCode.USAGE_ERROR


def test_canonicalize_from_words():
    code, text = run_cli('canonicalize', '--left', '++', '--right', '-++')
    assert code == ExitCode.SUCCESS
    lines = text.splitlines()
    assert lines[0] == 'signs L=++ R=-++: mixed double-cycle'
    assert lines[1] == 'canonical form n=3 m=2 (cycles exchanged)'
    assert lines[2].startswith('automaton')


def test_canonicalize_from_file(tmp_path):
    signs = tmp_path / 'signs.txt'
    signs.write_text('--+\n+++\n', encoding='utf-8')
    code, text = run_cli('canonicalize', str(signs), '--format', 'json')
    assert code == ExitCode.SUCCESS
    data = json.loads(text)
    assert data['kind'] == 'positive'
    assert data['flips'] == [0, 1, 0, 0, 0]


def test_canonicalize_needs_signs():
    assert run_cli('canonicalize', '--left', '++')[0] == ExitCode.USAGE_ERROR
    assert run_cli('canonicalize', '/nonexistent/signs.txt')[0] == ExitCode.USAGE_ERROR


def test_verify_suite_text():
    code, text = run_cli('verify', '--suite', 'mixed', '-n', '2', '-m', '2')
    assert code == ExitCode.SUCCESS
    assert text.splitlines()[0].split()[:3] == ['suite', 'check', 'n']
    assert '3 passed, 0 failed' in text


def test_verify_suite_json():
    code, text = run_cli('verify', '--suite', 'quadratic', '--sizes', '2,4', '--format', 'json')
    assert code == ExitCode.SUCCESS
    data = json.loads(text)
    assert data['suite'] == 'quadratic'
    assert data['summary']['failed'] == 0
    assert data['cases'][0]['pass'] is True


def test_verify_rejects_bad_sizes():
    assert run_cli('verify', '--suite', 'positive', '-n', '1', '-m', '2')[0] == ExitCode.USAGE_ERROR
    assert run_cli('verify', '--suite', 'positive', '-n', 'two', '-m', '2')[0] == ExitCode.USAGE_ERROR


def test_verify_save_and_history():
    code, _ = run_cli('verify', '--suite', 'canonicalization', '--samples', '3', '--save')
    assert code == ExitCode.SUCCESS
    code, text = run_cli('history')
    assert code == ExitCode.SUCCESS
    assert text.strip() == 'No verification runs stored'


@pytest.mark.slow
def test_verify_all():
    code, text = run_cli('verify', '--all', '--max-size', '7')
    assert code == ExitCode.SUCCESS
    assert text.rstrip().endswith('0 failed')


def test_attractors_small_instances():
    code, text = run_cli('attractors', '--kind', 'mixed', '-n', '3', '-m', '3')
    assert code == ExitCode.SUCCESS
    assert text.splitlines()[:2] == ['mixed double-cycle n=3 m=3: 1 attractor', '  size 1: (000,000)']
    code, text = run_cli('attractors', '--kind', 'positive', '-n', '1', '-m', '1')
    assert code == ExitCode.SUCCESS
    assert text.splitlines()[:3] == [
        'positive double-cycle n=1 m=1: 2 attractors', '  size 1: (0,0)', '  size 1: (1,1)',
    ]


def test_mismatched_hub_bit_is_rejected():
    code, _ = run_cli('run', '--kind', 'negative', '-n', '2', '-m', '2',
                      '--start', '(10,01)', '--program', 'sync')
    assert code == ExitCode.USAGE_ERROR
