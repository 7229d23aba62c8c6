from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from magicchart import config, utils
from magicchart.utils import format_rational, format_weight, get_rng, parse_rational, parse_weight


@pytest.mark.parametrize('txt, value', [('7/2', Fraction(7, 2)), (' -2/3 ', Fraction(-2, 3)), ('6', Fraction(6)),
                                        ('+4/8', Fraction(1, 2))])
def test_parse_rational(txt, value):
    assert parse_rational(txt) == value


@pytest.mark.parametrize('txt', ['', 'a', '1/0', '1.5', '2/-3'])
def test_parse_rational_rejects(txt):
    with pytest.raises(ValueError):
        parse_rational(txt)


@given(st.fractions(max_denominator=100))
def test_format_then_parse_rational(q):
    assert parse_rational(format_rational(q)) == q


def test_format_rational_integers_have_no_denominator():
    assert format_rational(Fraction(6)) == '6'
    assert format_rational(Fraction(-2, 3)) == '-2/3'


def test_parse_weight():
    assert parse_weight('0, 1,0') == (0, 1, 0)
    assert format_weight((1, 0, 2)) == '1,0,2'
    with pytest.raises(ValueError):
        parse_weight('1;2')


def test_get_rng_is_reproducible_per_key():
    a = [get_rng('x', 'S').randint(0, 10 ** 9) for _ in range(3)]
    b = [get_rng('x', 'S').randint(0, 10 ** 9) for _ in range(3)]
    assert a == b
    assert get_rng('x').random() != get_rng('y').random()


def test_get_rng_depends_on_seed():
    first = get_rng('k').random()
    config.seed = 1
    assert get_rng('k').random() != first


def test_log_respects_level_and_callbacks(capsys):
    received = []
    config.log_callbacks.append(lambda start, text, end: received.append(text))
    try:
        config.log_level = 1
        utils.log('shown')
        utils.log('hidden', log_level=2)
    finally:
        config.log_callbacks.pop()

    captured = capsys.readouterr()
    assert captured.out == ''
    assert '>> shown' in captured.err
    assert 'hidden' not in captured.err
    assert received == ['shown']


def test_run_thread_returns_started_thread():
    result = []
    t = utils.run_thread(result.append, 1)
    t.join()
    assert result == [1]
