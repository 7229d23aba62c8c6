#!/usr/bin/env python
"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        This is main application module
"""

# standard modules
import os
import sys
import argparse

# This code should stay on top to handle relative imports in case of direct call of MagicChart.py
if __package__ is None:
    path = os.path.realpath(os.path.abspath(__file__))
    sys.path.insert(0, os.path.dirname(path))
    sys.path.insert(0, os.path.dirname(os.path.dirname(path)))

    __package__ = 'magicchart'
    import magicchart


# local modules
from . import config, setting, dependency
from .config import Suite, ExitCode
from .about import about_notes
from .utils import log, parse_rational
from .version import __version__

FORMULA_NAMES = ('der', 'tri', 'g', 'exc-gk', 'subexc-gk', 'subexc-vk', 'subexc-v2k', 'severi-vk', 'e7-vdim',
                 'so12-w5w2', 'so12-w6w1', 'so12-4param', 'odd-sp-gk', 'sl-tilde-gk', 'vogel', 'adjoint')

# dim command parameters, collected into one dict before calling controller.dim()
DIM_PARAMS = ('a', 'b', 'c', 'd', 'k', 'i', 'j', 'n', 'algebra')


def pars_args(arguments):
    """parse arguments vector
    Args:
        arguments(list): list contains arguments, could be sys.argv[1:] i.e. without script name

    Returns:
        (dict): options, only options used by user are included, 'command' holds the sub command
    """

    description = """MagicChart computes the magic chart extended by the sextonions, checks composition,
        alternativity and derivation identities of the sextonions and octonions, Jordan algebra identities,
        and the closed dimension formulas of Cartan powers against the Weyl dimension formula, all in exact
        rational arithmetic."""

    def rational(txt):
        try:
            return parse_rational(txt)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e))

    # region cmdline arguments
    # Note: we should use "default=argparse.SUPPRESS" to discard option if not used by user,
    # and prevent default value overwrite in config module

    # common options are accepted before and after the sub command
    common = argparse.ArgumentParser(add_help=False)

    # ------------------------------------------------------------------------------------General options---------------
    general = common.add_argument_group(title='General options')
    general.add_argument(
        '-v', '--version',
        action='version', version='MagicChart version: ' + __version__,
        help='Print program version and exit')
    general.add_argument(
        '--about',
        action='store_true', default=argparse.SUPPRESS,
        help='show about notes and exit')
    general.add_argument(
        '--show-settings', dest='show_settings',
        action='store_true', default=argparse.SUPPRESS,
        help='show current application settings and their current values and exit')
    general.add_argument(
        '--ignore-config', dest='ignore_config', default=argparse.SUPPRESS,
        action='store_true',
        help='Do not load settings from config file. in ~/.config/MagicChart/ or (APPDATA/MagicChart/ on Windows)')
    general.add_argument(
        '--persistent',
        action='store_true', default=argparse.SUPPRESS,
        help='save current options in global configuration file, used in cmdline mode.')

    # -------------------------------------------------------------------------------------Verification options---------
    verification = common.add_argument_group(title='Verification options')
    verification.add_argument(
        '--seed', dest='seed',
        type=int, metavar='NUMBER', default=argparse.SUPPRESS,
        help=f'seed of the random samples, same seed gives same output, default="{config.seed}".')
    verification.add_argument(
        '--samples', dest='samples',
        type=int, metavar='NUMBER', default=argparse.SUPPRESS,
        help=f'random samples per identity, default="{config.samples}".')
    verification.add_argument(
        '--max-degree', dest='max_degree',
        type=int, metavar='NUMBER', default=argparse.SUPPRESS,
        help=f'highest degree of symmetric / exterior powers to decompose, default="{config.max_degree}", '
             f'environment variable {config.MAX_DEGREE_ENV} overrides the default.')
    verification.add_argument(
        '--max-module-dim', dest='max_module_dim',
        type=int, metavar='NUMBER', default=argparse.SUPPRESS,
        help=f'largest module dimension to decompose, default="{config.max_module_dim}".')
    verification.add_argument(
        '--threads', dest='verify_threads',
        type=int, metavar='NUMBER', default=argparse.SUPPRESS,
        help=f'worker threads for verification, default="{config.verify_threads}".')
    verification.add_argument(
        '--json', dest='report_format',
        action='store_const', const='json', default=argparse.SUPPRESS,
        help='print verification report as json')

    # -------------------------------------------------------------------------------------Debugging options------------
    debug = common.add_argument_group(title='Debugging Options')
    debug.add_argument(
        '-V', '--verbose', dest='verbose',
        type=int, metavar='LEVEL', default=argparse.SUPPRESS,
        help=f'verbosity level 1, 2, or 3, default={config.log_level}.')

    parser = argparse.ArgumentParser(
        prog='magicchart',
        description=description,
        epilog='copyright: (c) 2022 MagicChart. license: GNU LGPLv3, see LICENSE file for more details.',
        parents=[common],
    )

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')

    # ------------------------------------------------------------------------------------chart------------------------
    chart = subparsers.add_parser('chart', parents=[common], help='print the magic chart and the Barton-Sudbery table')
    chart.add_argument(
        '--format', dest='chart_format',
        choices=config.chart_formats, default=argparse.SUPPRESS,
        help=f'output format, default="{config.chart_format}".')

    # ------------------------------------------------------------------------------------dim--------------------------
    dim = subparsers.add_parser('dim', parents=[common], help='evaluate a dimension formula')
    dim.add_argument('formula', choices=FORMULA_NAMES, help='formula name')
    dim.add_argument('--a', type=rational, metavar='RATIONAL', help='first parameter, e.g. 6 or -2/3')
    dim.add_argument('--b', type=rational, metavar='RATIONAL', help='second parameter')
    dim.add_argument('--c', type=int, metavar='NUMBER', help='third parameter of so12-4param')
    dim.add_argument('--d', type=int, metavar='NUMBER', help='fourth parameter of so12-4param')
    dim.add_argument('--k', type=int, metavar='NUMBER', help='Cartan power')
    dim.add_argument('--i', type=int, metavar='NUMBER', help='first weight coefficient')
    dim.add_argument('--j', type=int, metavar='NUMBER', help='second weight coefficient')
    dim.add_argument('--n', type=int, metavar='NUMBER', help='rank parameter of families')
    dim.add_argument('--algebra', type=str, metavar='NAME', help='algebra name for vogel and adjoint, e.g. E8, sl')
    dim.add_argument('--expect', type=str, metavar='VALUE',
                     help='expected value, exit code 1 if the result differs')

    # ------------------------------------------------------------------------------------verify-----------------------
    verify = subparsers.add_parser('verify', parents=[common], help='run verification suites')
    verify.add_argument('suite', nargs='?', choices=Suite.choices, default=Suite.all,
                        help=f'suite to run, default="{Suite.all}".')

    # ------------------------------------------------------------------------------------decompose--------------------
    decompose = subparsers.add_parser('decompose', parents=[common],
                                      help='decompose a symmetric or exterior power of a module')
    decompose.add_argument('--type', dest='root_type', required=True, metavar='TYPE',
                           help='root system type, e.g. C3, A5, D6, 3A1')
    decompose.add_argument('--weights', required=True, metavar='MODULE',
                           help='highest weights with multiplicities, e.g. "0,0,1" or "0,0,0,0,0,1:2;1,0,0,0,0,0"')
    decompose.add_argument('--degree', type=int, default=1, metavar='NUMBER', help='power degree, default=1')
    decompose.add_argument('--kind', choices=('sym', 'alt'), default='sym', help='symmetric or exterior power')
    # ------------------------------------------------------------------------------------------------------------------

    # ------------------------------------------------------------------------------------jordan-----------------------
    jordan = subparsers.add_parser('jordan', parents=[common],
                                   help='print a point of the veronese variety in Z2(A) or of SP2 as json')
    jordan.add_argument('demo', choices=('nu3', 'sp2'), help='nu3: x -> nu3(x), sp2: the plane (e1^e2, e6*)')
    jordan.add_argument('--tag', choices=('H', 'S', 'O'), default='S', help='algebra of J3(A), default=S')
    jordan.add_argument('--x', metavar='COORDS', help='comma separated coordinates of x, default the identity')
    jordan.add_argument('--w', metavar='COORDS', help='translate nu3(x) by w')
    # ------------------------------------------------------------------------------------------------------------------
    # endregion

    args = parser.parse_args(arguments)
    sett = vars(args)

    return sett


def show_settings():
    for key in config.settings_keys:
        value = getattr(config, key)
        print(f'{key}: {value}')
    print('\nconfig file path:', setting.get_setting_file())


def main(argv=None):
    """
    app main
    Args:
        argv(list): command line arguments without script name, default sys.argv[1:]

    Returns:
        (int): exit code, 0 all pass, 1 verification failure, 2 usage error
    """
    argv = sys.argv[1:] if argv is None else list(argv)

    # read config file, command line options override it
    if '--ignore-config' not in argv:
        setting.load_setting()

    try:
        sett = pars_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 for --help / --version
        return e.code if isinstance(e.code, int) else ExitCode.usage

    if 'verbose' in sett:
        sett['log_level'] = sett.pop('verbose')

    command = sett.pop('command', None)

    if sett.get('about'):
        print(about_notes)
        return ExitCode.ok

    if sett.get('show_settings'):
        config.__dict__.update({k: v for k, v in sett.items() if k in config.settings_keys})
        show_settings()
        return ExitCode.ok

    if not command:
        log('no command given, use "magicchart -h" for help')
        return ExitCode.usage

    if not dependency.check_dependencies():
        return ExitCode.failure

    # controller imports sympy, it must come after the dependency check
    from .controller import Controller, log_runtime_info
    from .cmdview import CmdView

    options = {k: v for k, v in sett.items() if hasattr(config, k)}
    controller = Controller(view_class=CmdView, custom_settings=options)
    controller.run()
    log_runtime_info()

    code = ExitCode.ok
    try:
        if command == 'chart':
            controller.chart()

        elif command == 'dim':
            params = {k: sett[k] for k in DIM_PARAMS if sett.get(k) is not None}
            if not controller.dim(sett['formula'], params, expect=sett.get('expect')):
                code = ExitCode.failure

        elif command == 'verify':
            report = controller.verify(sett['suite'])
            if not report.passed:
                code = ExitCode.failure

        elif command == 'decompose':
            controller.decompose(sett['root_type'], sett['weights'], degree=sett['degree'], kind=sett['kind'])

        elif command == 'jordan':
            controller.jordan(sett['demo'], tag=sett['tag'], x=sett.get('x'), w=sett.get('w'))

    except (ValueError, ArithmeticError) as e:
        # inadmissible parameters, bad weights, bounds
        log(f'error: {e}')
        code = ExitCode.usage

    except KeyboardInterrupt:
        log('user interrupt operation, cleanup ...')
        code = ExitCode.failure

    finally:
        controller.quit()
        if sett.get('persistent'):
            setting.save_setting()

    return code


if __name__ == '__main__':
    sys.exit(main())
