import os

import pytest
from hypothesis import settings

from magicchart import config

# exact arithmetic over J3(O) is slow compared to hypothesis defaults
settings.register_profile('magicchart', max_examples=30, deadline=None)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'magicchart'))

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


@pytest.fixture(autouse=True)
def restore_config():
    """every test starts from the module defaults, cli tests change config through set_option"""
    saved = {k: v for k, v in config.__dict__.items() if not k.startswith('__')}
    config.test_mode = True
    yield
    for k in list(config.__dict__):
        if not k.startswith('__') and k not in saved:
            del config.__dict__[k]
    config.__dict__.update(saved)


@pytest.fixture
def few_samples():
    config.samples = 5
    config.secant_samples = 5
    return config


@pytest.fixture
def golden():
    def read(name):
        with open(os.path.join(GOLDEN_DIR, name), 'r', newline='') as f:
            return f.read()
    return read
