"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        This is a command line / Terminal view, as a layer between user and controller
        it must inherit from IView and implement all its abstract methods, see view.py
        results go to stdout, the progress line goes to stderr and only if stderr is a terminal,
        so redirected output stays byte identical between runs.
"""

import sys
import json
import shutil
from threading import Lock
from collections import namedtuple

from .view import IView
from . import config
from .config import Status


def write(s, end='', stream=None):
    stream = stream or sys.stdout
    stream.write(s + end)
    stream.flush()


terminal_size = namedtuple('terminal_size', ('width', 'height'))


def get_terminal_size():
    """get terminal window size, return 2-tuple (width, height)"""
    try:
        size = shutil.get_terminal_size()
    except Exception:
        # default fallback values
        size = (100, 20)
    return terminal_size(*size)


STATUS_LABELS = {
    Status.passed: 'PASS',
    Status.failed: 'FAIL',
    Status.error: 'ERROR',
    Status.skipped: 'SKIP',
}


def format_report(report, fmt='text'):
    """render a verification report as text or json, records are ordered by check id

    text example:
        PASS  compalg.composition.O
        FAIL  dims.exc_gk.a=6
              expected: [1, 133, 7371]
              actual:   [1, 133, 7372]
        compalg: 1 passed, 1 failed, 0 error, 0 skipped
    """
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2) + '\n'

    if fmt != 'text':
        raise ValueError(f'unknown report format: {fmt!r}, expected one of {config.report_formats}')

    lines = []
    for record in report.records:
        lines.append(f'{STATUS_LABELS[record.status]:<5} {record.check_id}')
        if record.status == Status.failed:
            d = record.to_dict()
            lines.append(f'      expected: {d["expected"]}')
            lines.append(f'      actual:   {d["actual"]}')
        elif record.status in (Status.error, Status.skipped) and record.error:
            lines.append(f'      {record.error}')

    summary = report.summary()
    lines.append(f'{report.suite}: ' + ', '.join(f'{summary[s]} {s}' for s in Status.all_states))
    return '\n'.join(lines) + '\n'


class CmdView(IView):
    """concrete class for terminal user interface"""

    def __init__(self, controller=None):
        self.controller = controller
        self.terminal_size = None
        self.show_progress = False
        self._lock = Lock()

    def run(self):
        """progress line is shown only on an interactive stderr"""
        try:
            self.show_progress = sys.stderr.isatty() and not config.test_mode
        except (AttributeError, ValueError):
            self.show_progress = False
        self.terminal_size = get_terminal_size()

    def quit(self):
        """clean progress line"""
        if self.show_progress:
            self.print_onlast('')
            write('', end='\n', stream=sys.stderr)

    def print_progress_bar(self, percent, suffix='', bar_length=20, fill='='):
        """print progress bar to stderr, percent is number between 0 and 100"""

        scale = bar_length / 100
        filled_length = int(percent * scale)
        bar = fill * filled_length + ' ' * (bar_length - filled_length)

        line = f' {percent}% [{bar}] {suffix}'
        self.print_onlast(line)

    def print_onlast(self, s):
        width = self.terminal_size.width if self.terminal_size else get_terminal_size().width

        # pad then truncate line to terminal width
        s = s + ' ' * max(0, width - 1 - len(s))
        write('\r' + s[:width - 1], stream=sys.stderr)

    def update_view(self, **kwargs):
        """update progress line, kwargs: suite, record, done, total"""
        if not self.show_progress:
            return

        done = kwargs.get('done', 0)
        total = kwargs.get('total') or 0
        record = kwargs.get('record')
        if not total:
            return

        percent = int(done * 100 / total)
        suffix = f'{done}/{total} {record.check_id if record else ""}'

        with self._lock:
            try:
                self.print_progress_bar(percent, suffix=suffix)
            except Exception:
                if config.test_mode:
                    raise

    def show_report(self, report, fmt='text'):
        if self.show_progress:
            self.print_onlast('')
            write('\r', stream=sys.stderr)
        write(format_report(report, fmt))

    def show_text(self, text):
        write(text if text.endswith('\n') else text + '\n')
