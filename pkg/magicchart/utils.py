"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        general helpers shared by all modules, logging, threads, json files and parsing of
        rational numbers / weights given on the command line
"""

import os
import re
import sys
import json
import random
import importlib
from importlib.util import find_spec
from threading import Thread
from fractions import Fraction

from . import config


def my_print(*args, **kwargs):
    """default printing function used by log(), it writes to stderr, stdout is reserved for results"""
    kwargs.setdefault('file', sys.stderr)
    print(*args, **kwargs)


def log(*args, log_level=1, start='>> ', end='\n', sep=' ', **kwargs):
    """print messages to stderr and execute any function or method in config.log_callbacks

    Args:
        args: comma separated messages to be printed
        log_level (int): used to filter messages, 1 to 3 for verbose
        start (str): prefix appended to start of string
        end (str): tail of string
        sep (str): separator used to join text "args"

    Returns:
        None
        """

    if log_level > config.log_level:
        return

    text = sep.join(map(str, args))

    try:
        my_print(start + text + end, end='', **kwargs)

        # execute registered log callbacks
        if log_level == 1:
            for f in config.log_callbacks:
                f(start, text, end)

    except Exception as e:
        my_print(e)


def load_json(fp):
    try:
        with open(fp, 'r') as f:
            data = json.load(f)
        return data
    except Exception as e:
        log('load_json() > error: ', e, fp)


def save_json(fp, data):
    try:
        with open(fp, 'w') as f:
            json.dump(data, f, indent=4)
            return data
    except Exception as e:
        log('save_json() > error: ', e, fp)


def data_path(*names):
    """return full path of a file shipped in magicchart/data"""
    return os.path.join(config.data_folder, *names)


def run_thread(f, *args, daemon=True, **kwargs):
    """run a callable in a thread

    Args:
        f (callable): any callable need to be run in a thread
        args: f's args
        daemon (bool): Daemon threads are abruptly stopped at shutdown
        kwargs: f's kwargs

    Example:
        def foo(name, greetings='hello'):
            print(greetings, name)

        run_thread(foo, 'John', greetings='hi')

    Returns:
        a thread reference
    """

    t = Thread(target=f, args=args, kwargs=kwargs, daemon=True)
    t.start()

    return t


def get_rng(*keys):
    """return a seeded python random generator (Mersenne Twister)

    the seed string is built from config.seed and the given keys, so every check gets its own
    reproducible stream no matter which thread runs it

    >>> get_rng('a').random() == get_rng('a').random()
    True
    """
    seed = ':'.join(map(str, (config.seed,) + keys))
    return random.Random(seed)


def parse_rational(txt):
    """parse a rational number

    Example:
        >>> parse_rational('7/2')
        Fraction(7, 2)
        >>> parse_rational(' -2/3 ')
        Fraction(-2, 3)
        >>> parse_rational('6')
        Fraction(6, 1)

    Raises:
        ValueError: if txt is not an integer or a fraction p/q
    """
    if isinstance(txt, (int, Fraction)):
        return Fraction(txt)

    txt = str(txt).strip()
    match = re.fullmatch(r'([+-]?\d+)(?:/(\d+))?', txt)
    if not match:
        raise ValueError(f'not a rational number: {txt!r}')

    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f'zero denominator: {txt!r}')

    return Fraction(int(num), int(den or 1))


def format_rational(value):
    """format a rational number, integers are printed without denominator

    >>> format_rational(Fraction(7, 2))
    '7/2'
    >>> format_rational(Fraction(6))
    '6'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_weight(txt):
    """parse comma separated fundamental weight coordinates, e.g. '0,1,0' -> (0, 1, 0)"""
    if isinstance(txt, (tuple, list)):
        return tuple(int(x) for x in txt)

    try:
        return tuple(int(x) for x in str(txt).replace(' ', '').split(','))
    except ValueError:
        raise ValueError(f'not a weight: {txt!r}, expected comma separated integers e.g. "0,1,0"')


def format_weight(weight):
    return ','.join(str(x) for x in weight)


def is_pkg_exist(pkg_name):
    """
    return True if pkg exist in sys.path and can be imported

    Args:
        pkg_name(str): package name, spaces will be stripped

    >>> is_pkg_exist('   magicchart  ')
    True
    >>> is_pkg_exist('blahx123456789x')
    False
    """
    pkg_name = pkg_name.strip()
    if find_spec(pkg_name) is not None:
        return True
    else:
        return False


def get_pkg_version(pkg_name):
    """return installed version string of a package or empty string"""
    try:
        module = importlib.import_module(pkg_name)
        return getattr(module, '__version__', '')
    except Exception:
        return ''
