"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        global settings and constants, every module reads its options from here,
        command line options and setting.cfg values are merged into this module namespace
"""

import os
import sys
import platform

from .version import __version__

# settings parameters to be saved on disk
settings_keys = [
    'log_level', 'max_degree', 'max_module_dim', 'seed', 'samples', 'secant_samples', 'verify_threads',
    'chart_format', 'report_format'
]

# ----------------------------------------------------------------------------------------General ----------------------
# CONSTANTS
APP_NAME = 'MagicChart'
APP_VERSION = __version__
APP_TITLE = f'{APP_NAME} version {APP_VERSION} .. exact arithmetic for the sextonions and the magic chart'

FROZEN = getattr(sys, "frozen", False)

operating_system = platform.system()  # current operating system  ('Windows', 'Linux', 'Darwin')

# Example output: Os: Linux - Platform: Linux-5.11.0-7614-generic-x86_64-with-glibc2.32 - Machine: x86_64
operating_system_info = f"Os: {platform.system()} - Platform: {platform.platform()} - Machine: {platform.machine()}"

try:
    import distro

    # Example output: Distribution: ('Pop!_OS', '20.10', 'groovy')
    operating_system_info += f"\nDistribution: {distro.name(pretty=True)}"
except Exception:
    pass

# ----------------------------------------------------------------------------------------Filesystem options------------
# current folders
if hasattr(sys, 'frozen'):
    current_directory = os.path.dirname(sys.executable)
else:
    path = os.path.realpath(os.path.abspath(__file__))
    current_directory = os.path.dirname(path)

# package data, i.e. parameter tables
data_folder = os.path.join(current_directory, 'data')

sett_folder = None
global_sett_folder = None

# ----------------------------------------------------------------------------------------Verification options----------
# PRNG seed for every randomized check, python's random.Random (Mersenne Twister) seeded with this value
seed = 0

# random samples per identity, e.g. Q(Q(x)) = det(x)x is checked on this many random x per algebra
samples = 100
secant_samples = 50

# coefficients of random algebra elements are drawn from this range
sample_range = (-5, 5)

# symmetric / exterior power bounds for rootsys.power_decompose
max_degree = 3
max_module_dim = 64
MAX_DEGREE_ENV = 'MAGICCHART_MAX_DEGREE'

# grid bounds for closed forms against the weyl dimension oracle
oracle_k_max = 4
severi_k_max = 6
sweep_k_max = 6
e7_grid = 3
so12_grid = 3
so12_4param_grid = 2

# worker threads used by controller.verify(), 1 disables threading
verify_threads = 4

# ----------------------------------------------------------------------------------------Output options----------------
chart_format = 'md'
chart_formats = ('md', 'csv', 'json')
report_format = 'text'
report_formats = ('text', 'json')

# ----------------------------------------------------------------------------------------Debugging options-------------
log_level = 1  # standard=1, verbose=2, debug=3

# log callbacks that will be executed when calling log func in utils
# callback should accept 3 positional args e.g. log_callback(start, text, end)
log_callbacks = []
test_mode = False


# environment override, must stay after max_degree definition
def _env_max_degree():
    value = os.environ.get(MAX_DEGREE_ENV)
    if value is None:
        return None
    try:
        value = int(value)
    except ValueError:
        print(f'>> ignoring {MAX_DEGREE_ENV}={value!r}, integer expected', file=sys.stderr)
        return None
    return value if value > 0 else None


max_degree = _env_max_degree() or max_degree


# status class as an Enum
class Status:
    """used to identify check outcome, work as an Enum"""
    passed = 'passed'
    failed = 'failed'
    error = 'error'
    skipped = 'skipped'
    all_states = (passed, failed, error, skipped)


class Suite:
    """verification suites, work as an Enum"""
    compalg = 'compalg'
    jordan = 'jordan'
    dims = 'dims'
    decomp = 'decomp'
    all = 'all'
    choices = (all, compalg, jordan, dims, decomp)
    members = (compalg, jordan, dims, decomp)


class ExitCode:
    ok = 0
    failure = 1
    usage = 2
