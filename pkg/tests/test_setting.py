import json

from magicchart import config, dependency, setting


def test_save_then_load(tmp_path):
    config.sett_folder = str(tmp_path / 'MagicChart')
    config.seed = 5
    config.chart_format = 'csv'
    setting.save_setting()

    config.seed = 0
    config.chart_format = 'md'
    setting.load_setting()
    assert config.seed == 5
    assert config.chart_format == 'csv'


def test_unknown_and_broken_settings(tmp_path):
    config.sett_folder = str(tmp_path)
    (tmp_path / 'setting.cfg').write_text(json.dumps({'seed': 3, 'APP_NAME': 'other'}))
    assert setting.get_user_settings() == {'seed': 3}

    (tmp_path / 'setting.cfg').write_text('{not json')
    assert setting.get_user_settings() == {}


def test_missing_setting_file(tmp_path):
    config.sett_folder = str(tmp_path)
    assert setting.get_user_settings() == {}


def test_dependencies():
    assert dependency.missing_pkgs() == []
    assert dependency.missing_pkgs(['blahx123456789x']) == ['blahx123456789x']
    assert dependency.outdated_pkgs() == []
    assert dependency.check_dependencies()
