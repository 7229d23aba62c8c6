import csv
import io
import json

import pytest

from magicchart import config
from magicchart.MagicChart import main


def run(capsys, *args):
    code = main(['--ignore-config', *args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# region chart
def test_chart_markdown(capsys, golden):
    code, out, _ = run(capsys, 'chart')
    assert code == 0
    assert out == golden('chart.md')


def test_chart_csv(capsys, golden):
    code, out, _ = run(capsys, 'chart', '--format', 'csv')
    assert code == 0
    assert out == golden('chart.csv')

    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows[0]) == 8
    assert rows[5][-1] == 'E_8 (248)'


def test_chart_json(capsys, golden):
    code, out, _ = run(capsys, 'chart', '--format', 'json')
    assert code == 0
    assert json.loads(out) == json.loads(golden('chart.json'))


def test_chart_is_byte_identical(capsys):
    outputs = [run(capsys, 'chart', '--format', fmt)[1] for fmt in ('json', 'json', 'md', 'md')]
    assert outputs[0] == outputs[1]
    assert outputs[2] == outputs[3]


def test_chart_unknown_format(capsys):
    code, _, err = run(capsys, 'chart', '--format', 'html')
    assert code == 2
    assert 'invalid choice' in err
# endregion


# region dim
@pytest.mark.parametrize('args, out', [
    (['exc-gk', '--a', '8', '--k', '1'], '248'),
    (['exc-gk', '--a=-2/3', '--k', '1'], '14'),
    (['g', '--a=-2/3', '--b', '8'], '14'),
    (['der', '--a', '1/2'], '2/3'),
    (['subexc-v2k', '--a', '6', '--k', '2'], '219912'),
    (['severi-vk', '--a', '6', '--k', '2'], '210'),
    (['so12-4param', '--a', '0', '--b', '0', '--c', '0', '--d', '1'], '66'),
    (['e7-vdim', '--i', '0', '--j', '1'], '56'),
    (['odd-sp-gk', '--n', '2', '--k', '1'], '15'),
    (['sl-tilde-gk', '--n', '3', '--k', '2'], '84'),
    (['vogel', '--algebra', 'so', '--n', '12'], '66'),
    (['adjoint', '--algebra', 'E8'], '33 45 57'),
])
def test_dim(capsys, args, out):
    code, stdout, _ = run(capsys, 'dim', *args)
    assert code == 0
    assert stdout == out + '\n'


def test_dim_expect(capsys):
    assert run(capsys, 'dim', 'exc-gk', '--a', '6', '--k', '1', '--expect', '190')[0] == 0
    code, out, err = run(capsys, 'dim', 'exc-gk', '--a', '6', '--k', '1', '--expect', '191')
    assert code == 1
    assert out == '190\n'
    assert 'expected 191' in err


@pytest.mark.parametrize('args', [
    ['subexc-gk', '--a', '3', '--k', '1'],
    ['exc-gk', '--a', '8'],
    ['der', '--a=-4'],
    ['vogel'],
    ['e7-vdim', '--i=-1', '--j', '0'],
])
def test_dim_errors(capsys, args):
    code, out, err = run(capsys, 'dim', *args)
    assert code == 2
    assert out == ''
    assert 'error' in err


def test_usage_errors(capsys):
    assert run(capsys, 'dim', 'unknown')[0] == 2
    assert run(capsys, 'dim', 'der', '--a', 'x')[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, 'verify', 'geometry')[0] == 2
# endregion


# region verify
def test_verify_compalg(capsys):
    code, out, _ = run(capsys, 'verify', 'compalg', '--seed', '1', '--samples', '5')
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].startswith('compalg: ')
    assert lines[-1].endswith('0 failed, 0 error, 0 skipped')
    assert all(line.startswith('PASS ') for line in lines[:-1])
    assert lines[:-1] == sorted(lines[:-1], key=lambda line: line.split()[-1])


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, 'verify', 'compalg', '--samples', '5', '--json', '--threads', '2')
    assert code == 0
    report = json.loads(out)
    assert report['suite'] == 'compalg'
    assert report['summary']['failed'] == 0
    assert all(c['pass'] for c in report['checks'])
    assert set(report['checks'][0]) == {'id', 'description', 'expected', 'actual', 'pass'}


def test_verify_output_is_reproducible(capsys):
    args = ('verify', 'compalg', '--seed', '3', '--samples', '5', '--json')
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_verify_decomp_low_degree(capsys):
    code, out, _ = run(capsys, 'verify', 'decomp', '--max-degree', '1')
    assert code == 0
    assert 'SKIP  decomp.row1.sym2' in out
    assert 'PASS  decomp.row1.sym1' in out
    assert config.max_degree == 1
# endregion


# region decompose and settings
def test_decompose(capsys):
    code, out, _ = run(capsys, 'decompose', '--type', 'C3', '--weights', '1,0,0', '--degree', '2', '--kind', 'alt')
    assert code == 0
    assert out == '0,0,0:1;0,1,0:1\ndim: 15\n'


def test_decompose_errors(capsys):
    assert run(capsys, 'decompose', '--type', 'C3', '--weights', '1,0')[0] == 2
    assert run(capsys, 'decompose', '--type', 'C3', '--weights=1,-1,0')[0] == 2
    assert run(capsys, 'decompose', '--type', 'X9', '--weights', '1')[0] == 2
    assert run(capsys, 'decompose', '--type', 'D6', '--weights', '0,0,0,0,0,1:2;1,0,0,0,0,0', '--degree', '2')[0] == 2


def test_jordan_nu3(capsys):
    code, out, _ = run(capsys, 'jordan', 'nu3')
    assert code == 0
    point = json.loads(out)
    assert point['det'] == '1' and point['quartic'] == '0'
    assert point['nu3']['s'] == '1' and point['nu3']['t'] == '1'
    assert point['cofactor'] == point['x']
    assert point['member'] is True
    assert 'translated' not in point


def test_jordan_nu3_translated(capsys):
    identity = ','.join(['1'] * 3 + ['0'] * 18)
    code, out, _ = run(capsys, 'jordan', 'nu3', '--x', identity, '--w', identity)
    assert code == 0
    # nu3(I) moved by I is nu3(2I)
    translated = json.loads(out)['translated']
    assert translated['t'] == '8'
    assert translated['x']['diag'] == ['2', '2', '2']
    assert translated['y']['diag'] == ['4', '4', '4']


def test_jordan_nu3_over_octonions(capsys):
    code, out, _ = run(capsys, 'jordan', 'nu3', '--tag', 'O', '--x', ','.join(['2', '1', '1'] + ['0'] * 24))
    assert code == 0
    point = json.loads(out)
    assert point['det'] == '2'
    assert point['x']['tag'] == 'O'
    assert 'member' not in point


def test_jordan_sp2(capsys):
    code, out, _ = run(capsys, 'jordan', 'sp2')
    assert code == 0
    result = json.loads(out)
    assert result['member'] is True
    assert result['dimension'] == 12
    # e1^e2 and e6*
    assert result['point']['omega'] == ['1'] + ['0'] * 14
    assert result['point']['h'] == ['0'] * 5 + ['1']


def test_jordan_errors(capsys):
    assert run(capsys, 'jordan', 'nu3', '--x', '1,1,1')[0] == 2
    assert run(capsys, 'jordan', 'nu3', '--w', 'a,b')[0] == 2
    assert run(capsys, 'jordan', 'cubic')[0] == 2
    assert run(capsys, 'jordan', 'nu3', '--tag', 'R')[0] == 2


def test_show_settings(capsys):
    code, out, _ = run(capsys, '--show-settings', '--seed', '9')
    assert code == 0
    assert 'seed: 9' in out
    assert 'config file path:' in out


def test_about(capsys):
    code, out, _ = run(capsys, '--about')
    assert code == 0
    assert 'MagicChart' in out
# endregion
