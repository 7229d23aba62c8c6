"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    module description:
        This is the controller module as a part of MVC design, it is the only place where library
        modules, report model and view meet.
        The model is ObservableReport located at model.py, it notifies controller for every new check record,
        in turn controller will update the current view
"""
import io
import csv
import sys
import json
from queue import Queue, Empty

import sympy

from . import config
from .config import Suite
from .utils import log, run_thread, parse_rational, format_rational
from .model import ObservableReport
from .verify import get_checks
from .intermediate import magic_chart
from .rootsys import build_root_system, parse_module, power_decompose, format_module, module_dim
from . import dimform
from . import intermediate
from .jordan import (J3A, LambdaRep, gw_membership, j3_cofactor, j3_det, nu3, sp2_dimension_check, sp2_membership, t_w,
                     z2_quartic)


def set_option(**kwargs):
    """set global setting option(s) in config.py"""
    try:
        config.__dict__.update(kwargs)
        log('Settings:', kwargs, log_level=3)
    except Exception:
        pass


def get_option(key, default=None):
    """get global setting option(s) in config.py"""
    try:
        return config.__dict__.get(key, default)
    except Exception:
        return None


def log_runtime_info():
    """Print useful information about the system"""
    log('-' * 20, config.APP_NAME, '-' * 20, log_level=2)
    log('Starting MagicChart version:', config.APP_VERSION, 'Frozen' if config.FROZEN else 'Non-Frozen',
        log_level=2)
    log('operating system:', config.operating_system_info, log_level=2)
    log('Python version:', sys.version, log_level=2)
    log('sympy version:', sympy.__version__, log_level=2)
    log('seed:', config.seed, '- max degree:', config.max_degree, '- threads:', config.verify_threads,
        log_level=2)


# region chart rendering
def _cell(entry):
    return f'{entry.name} ({entry.dim})'


def render_chart(chart, fmt='md'):
    """render the magic chart and the Barton-Sudbery table

    Args:
        chart (intermediate.MagicChart): chart data
        fmt (str): 'md', 'csv' or 'json'

    Returns:
        (str): text ending with a newline, identical on every call
    """
    rows = [format_rational(a) for a in chart.rows]
    cols = [format_rational(b) for b in chart.cols]

    if fmt == 'json':
        return json.dumps(chart.to_dict(), indent=2) + '\n'

    elif fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['a\\b'] + cols)
        for a, row in zip(rows, chart.grid):
            writer.writerow([a] + [_cell(e) for e in row])
        buffer.write('\n')
        writer.writerow(['a'] + list(chart.bs_columns))
        for a, row in zip(rows, chart.bs_grid):
            writer.writerow([a] + [_cell(e) for e in row])
        return buffer.getvalue()

    elif fmt == 'md':
        def table(header, body):
            lines = ['| ' + ' | '.join(header) + ' |', '|' + '---|' * len(header)]
            lines += ['| ' + ' | '.join(line) + ' |' for line in body]
            return lines

        lines = ['# Magic chart', '']
        lines += table(['a \\ b'] + cols, [[a] + [_cell(e) for e in row] for a, row in zip(rows, chart.grid)])
        lines += ['', '# Barton-Sudbery table', '']
        lines += table(['a'] + list(chart.bs_columns),
                       [[a] + [_cell(e) for e in row] for a, row in zip(rows, chart.bs_grid)])
        return '\n'.join(lines) + '\n'

    raise ValueError(f'unknown chart format: {fmt!r}, expected one of {config.chart_formats}')
# endregion


# region dim formulas
def _vogel(algebra=None, n=None):
    if not algebra:
        raise ValueError('vogel needs --algebra')
    p = dimform.vogel_params(algebra, n)
    return dimform.vogel_dim(p.alpha, p.beta, p.gamma)


def _adjoint(algebra=None, n=None):
    if not algebra:
        raise ValueError('adjoint needs --algebra')
    return dimform.adjoint_dims(dimform.adjoint_params(algebra, n))


# formula name: (callable, parameter names)
FORMULAS = {
    'der': (dimform.dim_der, ('a',)),
    'tri': (dimform.dim_tri, ('a',)),
    'g': (dimform.dim_g, ('a', 'b')),
    'exc-gk': (dimform.exc_gk, ('a', 'k')),
    'subexc-gk': (dimform.subexc_gk, ('a', 'k')),
    'subexc-vk': (dimform.subexc_vk, ('a', 'k')),
    'subexc-v2k': (dimform.subexc_v2k, ('a', 'k')),
    'severi-vk': (dimform.severi_vk, ('a', 'k')),
    'e7-vdim': (dimform.e7_vdim, ('i', 'j')),
    'so12-w5w2': (dimform.so12_vdim_w5w2, ('i', 'j')),
    'so12-w6w1': (dimform.so12_vdim_w6w1, ('i', 'j')),
    'so12-4param': (dimform.so12_vdim_4param, ('a', 'b', 'c', 'd')),
    'odd-sp-gk': (intermediate.odd_symplectic_gk, ('n', 'k')),
    'sl-tilde-gk': (intermediate.sl_tilde_gk, ('n', 'k')),
    'vogel': (_vogel, ('algebra', 'n')),
    'adjoint': (_adjoint, ('algebra', 'n')),
}

# parameters that may be left out
OPTIONAL_PARAMS = {'vogel': ('n',), 'adjoint': ('n',)}


def format_value(value):
    """Fraction -> '7/2', tuples -> space separated"""
    if isinstance(value, (tuple, list)):
        return ' '.join(format_value(v) for v in value)
    if isinstance(value, str):
        return value
    return format_rational(value)


def evaluate_formula(formula, params):
    """evaluate a named formula

    Args:
        formula (str): key of FORMULAS, e.g. 'exc-gk'
        params (dict): parameter values, missing ones raise ValueError

    Returns:
        value of the formula
    """
    try:
        func, names = FORMULAS[formula]
    except KeyError:
        raise ValueError(f'unknown formula: {formula!r}, expected one of {list(FORMULAS)}')

    args = []
    for name in names:
        value = params.get(name)
        if value is None and name not in OPTIONAL_PARAMS.get(formula, ()):
            raise ValueError(f'{formula} needs --{name}')
        args.append(value)

    return func(*args)
# endregion


# region jordan points
JORDAN_DEMOS = ('nu3', 'sp2')


def _coords(txt):
    return [parse_rational(v) for v in str(txt).split(',')]


def jordan_point(demo, tag='S', x=None, w=None):
    """json friendly description of a point of the veronese variety or of SP2

    Args:
        demo (str): 'nu3' for nu3(x) in Z2(A), 'sp2' for the plane (e1^e2, e6*) in Lambda^2 W + W*
        tag (str): algebra of J3(A), H, S or O
        x (str): comma separated coordinates of x, r1, r2, r3 then a, b, c, default the identity
        w (str): coordinates of a translation applied to nu3(x)

    Returns:
        (dict): to_dict() of the points with their invariants
    """
    if demo == 'sp2':
        p = LambdaRep.from_planes([(1, 1, 2)], 6)
        return {'point': p.to_dict(), 'member': sp2_membership(p), 'dimension': int(sp2_dimension_check(p))}

    if demo != 'nu3':
        raise ValueError(f'unknown jordan demo: {demo!r}, expected one of {JORDAN_DEMOS}')

    x = J3A.from_coords(tag, _coords(x)) if x else J3A.identity(tag)
    m = nu3(x)
    result = {'x': x.to_dict(), 'det': format_rational(j3_det(x)), 'cofactor': j3_cofactor(x).to_dict(),
              'nu3': m.to_dict(), 'quartic': format_rational(z2_quartic(m))}

    # membership equations are those of the sextonionic grassmannian
    if tag == 'S':
        result['member'] = gw_membership(m)

    if w:
        result['translated'] = t_w(m, J3A.from_coords(tag, _coords(w))).to_dict()
    return result
# endregion


class Controller:
    """controller class
     communicate with view and has the logic for every command

    it will update view thru an update_view method "refer to view.py" when a report changes,
    data will be passed in key, value kwargs: suite, record, done, total
    """

    def __init__(self, view_class, custom_settings={}):
        self.observer_q = Queue()  # queue to collect report updates

        # command line options that override config values for this session
        set_option(**custom_settings)

        # create view
        self.view = view_class(controller=self)

        # observer thread, it will run in a different thread waiting on observer_q and call self._update_view
        self._observer_thread = run_thread(self._observer)

    def run(self):
        """run current "view" main loop"""
        self.view.run()

    def quit(self):
        self.observer_q.put(None)
        self._observer_thread.join(timeout=5)
        self.view.quit()

    def observer(self, **kwargs):
        """This is an observer method which get notified when a record is added to ObservableReport
        it should be as light as possible, check workers call it"""

        self.observer_q.put(kwargs)

    def _observer(self):
        """run in a thread and update view once there is a new record, None stops it"""
        while True:
            item = self.observer_q.get()
            if item is None:
                break
            self._update_view(**item)

    def _update_view(self, **kwargs):
        """update "view" by calling its update method"""
        try:
            self.view.update_view(**kwargs)
        except Exception as e:
            log('controller._update_view()> error, ', e)
            if config.test_mode:
                raise e

    # region commands
    def chart(self, fmt=None):
        """render the chart and pass it to view"""
        text = render_chart(magic_chart(), fmt or config.chart_format)
        self.view.show_text(text)
        return text

    def dim(self, formula, params, expect=None):
        """evaluate a dimension formula

        Args:
            formula (str): formula name, see FORMULAS
            params (dict): parameters
            expect (str): if given, the value must equal it

        Returns:
            (bool): False if expect is given and differs from the value
        """
        value = evaluate_formula(formula, params)
        text = format_value(value)
        self.view.show_text(text)

        if expect is not None:
            try:
                expected = format_rational(parse_rational(expect))
            except ValueError:
                expected = str(expect).strip()
            if expected != text:
                log(f'{formula}: expected {expected}, got {text}')
                return False
        return True

    def decompose(self, tag, weights, degree=1, kind='sym'):
        """constituents of S^d or Lambda^d of a module given by 'w:m;...' text"""
        rs = build_root_system(tag)
        spec = parse_module(weights)
        for w, _ in spec:
            rs.check_dominant(w)
        result = power_decompose(rs, spec, degree, kind)
        text = f'{format_module(result)}\ndim: {module_dim(rs, result)}'
        self.view.show_text(text)
        return result

    def jordan(self, demo, tag='S', x=None, w=None):
        """print a jordan point as json"""
        result = jordan_point(demo, tag=tag, x=x, w=w)
        self.view.show_text(json.dumps(result, indent=2))
        return result

    def verify(self, suite=Suite.all, seed=None, max_degree=None, samples=None, fmt=None):
        """run the checks of a suite on config.verify_threads worker threads

        Returns:
            (ObservableReport): report ordered by check id
        """
        if seed is not None:
            set_option(seed=seed)
        if max_degree is not None:
            set_option(max_degree=max_degree)
        if samples is not None:
            set_option(samples=samples)

        checks = get_checks(suite)
        report = ObservableReport(suite, total=len(checks), observer_callbacks=[self.observer])
        log(f'verify {suite}: {len(checks)} checks, seed {config.seed}', log_level=2)

        jobs = Queue()
        for check in checks:
            jobs.put(check)

        def worker():
            while True:
                try:
                    check = jobs.get_nowait()
                except Empty:
                    break
                report.add(check.run())

        threads = [run_thread(worker) for _ in range(max(1, min(config.verify_threads, len(checks))))]
        for t in threads:
            t.join()

        self.view.show_report(report, fmt or config.report_format)
        return report
    # endregion
