#!/usr/bin/env python3
"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.
"""
import sys

from magicchart import MagicChart

sys.exit(MagicChart.main())
