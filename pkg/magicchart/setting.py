"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.

    Module description:
        load / save user settings from / to setting.cfg
"""

import os
import json

from . import config
from .utils import log, save_json


def get_global_sett_folder():
    """return a proper global setting folder"""
    home_folder = os.path.expanduser('~')

    if config.operating_system == 'Windows':
        roaming = os.getenv('APPDATA', home_folder)  # return APPDATA\Roaming\ under windows
        _sett_folder = os.path.join(roaming, f'.{config.APP_NAME}')

    elif config.operating_system == 'Linux':
        _sett_folder = f'{home_folder}/.config/{config.APP_NAME}/'

    elif config.operating_system == 'Darwin':
        _sett_folder = f'{home_folder}/Library/Application Support/{config.APP_NAME}/'

    else:
        _sett_folder = config.current_directory

    return _sett_folder


config.global_sett_folder = get_global_sett_folder()


def locate_setting_folder():
    """check local folder and global setting folder for setting.cfg file"""

    # look for previous setting file
    if os.path.isfile(os.path.join(config.current_directory, 'setting.cfg')):
        setting_folder = config.current_directory
    else:
        # settings are written to the global folder, the package folder is usually read only
        setting_folder = config.global_sett_folder

    return setting_folder


config.sett_folder = locate_setting_folder()


def get_setting_file():
    return os.path.join(config.sett_folder, 'setting.cfg')


def get_user_settings():
    settings = {}
    try:
        file = get_setting_file()
        with open(file, 'r') as f:
            settings = json.load(f)

    except FileNotFoundError:
        log('setting.cfg not found', log_level=2)
    except Exception as e:
        log('load_setting()> ', e)
    finally:
        if not isinstance(settings, dict):
            settings = {}

        # unknown keys are ignored, setting.cfg may come from another version
        settings = {k: v for k, v in settings.items() if k in config.settings_keys}

        return settings


def load_setting():
    log('Load Application setting from', config.sett_folder, log_level=2)
    settings = get_user_settings()

    # update config module
    config.__dict__.update(settings)


def save_setting():
    settings = {key: config.__dict__.get(key) for key in config.settings_keys}

    try:
        if not os.path.isdir(config.sett_folder):
            os.makedirs(config.sett_folder, exist_ok=True)

        file = get_setting_file()
        if save_json(file, settings) is not None:
            log('settings saved in:', file)
    except Exception as e:
        log('save_setting() > error', e)
