"""Tests for configuration loading and run settings"""

import pytest

from config_loader import DEFAULTS, RunConfig, build_run_config, load_config, parse_n_range
from errors import ConfigError


def test_defaults_without_file():
    settings = load_config()
    assert settings == DEFAULTS
    assert settings is not DEFAULTS


def test_yaml_overrides_merge(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text("field: fp:7\nverify:\n  n_range: '3..4'\nrandom:\n  seed: 11\n", encoding='utf-8')
    settings = load_config(str(path))
    assert settings['field'] == 'fp:7'
    assert settings['random']['seed'] == 11
    assert settings['random']['numerator_bound'] == 9
    cfg = build_run_config('verify', settings)
    assert cfg.n_values == (3, 4)
    assert cfg.field.characteristic == 7


@pytest.mark.parametrize("content", ["field: [unclosed", "- just\n- a list\n"])
def test_bad_yaml(tmp_path, content):
    path = tmp_path / 'config.yaml'
    path.write_text(content, encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'absent.yaml'))


def test_n_ranges():
    assert parse_n_range('2..6') == (2, 3, 4, 5, 6)
    assert parse_n_range(' 4 ') == (4,)
    assert parse_n_range(5) == (5,)
    for bad in ('6..2', 'two', '2-6', ''):
        with pytest.raises(ConfigError):
            parse_n_range(bad)


def test_overrides_and_validation():
    settings = load_config()
    cfg = build_run_config('verify', settings, n_values='2', seed=None, output_format='json')
    assert cfg.n_values == (2,)
    assert cfg.seed == 20240229
    assert cfg.output_format == 'json'
    assert build_run_config('hypersurface', settings).n_values == (2,)
    with pytest.raises(ConfigError):
        build_run_config('verify', settings, n_values='1..3')
    with pytest.raises(ConfigError):
        build_run_config('verify', settings, field_selector='fp:9')
    with pytest.raises(ConfigError):
        RunConfig(budget_seconds=0)
    with pytest.raises(ConfigError):
        RunConfig(output_format='xml')
    with pytest.raises(ConfigError):
        RunConfig(denominators=[])


def test_malformed_values():
    settings = load_config()
    settings['random']['seed'] = 'abc'
    with pytest.raises(ConfigError):
        build_run_config('verify', settings)
