"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        this module contains an observable data model for verification reports, the controller registers
        a callback and every added check record is passed on to the current view
"""
from fractions import Fraction
from threading import Lock

from .config import Status
from .utils import format_rational


def jsonable(value):
    """convert check values to json friendly types, Fractions become 'p/q' strings"""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [jsonable(v) for v in value]
    return str(value)


class CheckRecord:
    """outcome of a single verification check"""

    def __init__(self, check_id, description='', expected=None, actual=None, status=Status.passed, error=''):
        self.check_id = check_id
        self.description = description
        self.expected = expected
        self.actual = actual
        self.status = status
        self.error = error

    @property
    def passed(self):
        return self.status == Status.passed

    def to_dict(self):
        return {
            'id': self.check_id,
            'description': self.description,
            'expected': jsonable(self.expected),
            'actual': jsonable(self.actual),
            'pass': None if self.status == Status.skipped else self.passed,
        }

    def __repr__(self):
        return f'CheckRecord({self.check_id}, {self.status})'


class Observable:
    """super class for observable reports"""
    def __init__(self, observer_callbacks=None):
        """initialize

        Args:
            observer_callbacks (iterable): list or tuple of callbacks that will be called with every new record
        """

        # list of callbacks to be executed on changes
        self.observer_callbacks = list(observer_callbacks or [])

    def _notify(self, **kwargs):
        """execute registered callbacks"""
        for callback in self.observer_callbacks:
            callback(**kwargs)

    def register_callback(self, callback):
        if callback not in self.observer_callbacks:
            self.observer_callbacks.append(callback)

    def unregister_callback(self, callback):
        if callback in self.observer_callbacks:
            self.observer_callbacks.remove(callback)


class ObservableReport(Observable):
    """verification report of one suite, records may be added from several worker threads"""

    def __init__(self, suite, total=0, observer_callbacks=None):
        Observable.__init__(self, observer_callbacks=observer_callbacks)
        self.suite = suite
        self.total = total
        self._records = []
        self._lock = Lock()

    def add(self, record):
        with self._lock:
            self._records.append(record)
            done = len(self._records)
        self._notify(suite=self.suite, record=record, done=done, total=self.total)

    @property
    def records(self):
        """records sorted by check id, independent of the order in which workers finished"""
        with self._lock:
            return sorted(self._records, key=lambda r: r.check_id)

    def summary(self):
        counts = {status: 0 for status in Status.all_states}
        for record in self.records:
            counts[record.status] += 1
        return counts

    @property
    def passed(self):
        """True when no check failed or errored, skipped checks do not count"""
        summary = self.summary()
        return summary[Status.failed] == 0 and summary[Status.error] == 0

    def to_dict(self):
        return {
            'suite': self.suite,
            'summary': self.summary(),
            'checks': [r.to_dict() for r in self.records],
        }
