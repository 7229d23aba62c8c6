#!/usr/bin/env python
"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.
"""

# The purpose of this module is checking dependencies before running any command
import sys

from packaging.version import Version, InvalidVersion

from .utils import get_pkg_version, is_pkg_exist, log

# add the required packages here without any version numbers
requirements = ['sympy']

# optional packages, only improve reporting
optional = ['distro']

# lowest tested versions
min_versions = {'sympy': '1.7'}


def is_venv():
    """check if running inside virtual environment
    there is no 100% working method to tell, but we can check for both real_prefix and base_prefix"""
    if hasattr(sys, 'real_prefix') or (hasattr(sys, 'base_prefix') and sys.base_prefix != sys.prefix):
        return True
    else:
        return False


def missing_pkgs(pkgs=None):
    """list of required packages that can't be found"""
    return [pkg for pkg in (pkgs or requirements) if not is_pkg_exist(pkg)]


def outdated_pkgs():
    """list of (pkg, installed version, minimum version) for packages older than min_versions"""
    result = []
    for pkg, minimum in min_versions.items():
        installed = get_pkg_version(pkg)
        try:
            if installed and Version(installed) < Version(minimum):
                result.append((pkg, installed, minimum))
        except InvalidVersion:
            log(f'dependency: unknown version format {installed!r} for {pkg}', log_level=2)
    return result


def check_dependencies():
    """log missing or outdated packages with the pip command to fix them

    Returns:
        (bool): True if every required package is present
    """
    missing = missing_pkgs()
    for pkg, installed, minimum in outdated_pkgs():
        log(f'{pkg} version {installed} is older than the tested version {minimum}')

    if missing:
        user_flag = '' if is_venv() else ' --user'
        log('required pkgs: ', requirements)
        log('missing pkgs: ', missing)
        log(f'install with: {sys.executable} -m pip install{user_flag} {" ".join(missing)}')
        return False

    for pkg in missing_pkgs(optional):
        log(f'optional package {pkg} not found', log_level=2)
    return True
