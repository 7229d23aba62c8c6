"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        An interface for All views
"""


from abc import ABC, abstractmethod


class IView(ABC):
    @abstractmethod
    def run(self):
        """prepare the view before the controller starts reporting"""
        pass

    @abstractmethod
    def quit(self):
        """release any resource held by the view, e.g. a reserved terminal line"""
        pass

    @abstractmethod
    def update_view(self, **kwargs):
        """update view, it will be called automatically by controller, when a report changes
        this method shouldn't block

        kwargs will have: suite, record, done, total
        """
        pass

    @abstractmethod
    def show_report(self, report, fmt='text'):
        """present a finished verification report

        Args:
            report (ObservableReport): report with all records added
            fmt (str): one of config.report_formats
        """
        pass

    @abstractmethod
    def show_text(self, text):
        """present a result text, e.g. a rendered chart or a dimension value"""
        pass
