from fractions import Fraction

import pytest
from pydantic import ValidationError

from core.initialization import initialize_run, load_configuration
from models.errors import ConfigError
from utils.config_manager import DEFAULTS, ConfigManager
from utils.config_validator import validate_config

# ------------------------- Fixtures ------------------------- #


@pytest.fixture
def no_env_file(tmp_path):
    return str(tmp_path / "missing.env")


@pytest.fixture
def caps():
    return dict(DEFAULTS)


# ------------------------- Loading ------------------------- #

def test_defaults_without_environment(monkeypatch, no_env_file):
    for key in DEFAULTS:
        monkeypatch.delenv("COXWL2_" + key, raising=False)
    conf = load_configuration(no_env_file)
    assert conf == DEFAULTS


def test_environment_overrides(monkeypatch, no_env_file):
    monkeypatch.setenv("COXWL2_MAX_ORDER", "1_000")
    monkeypatch.setenv("COXWL2_ISOLATION_TOLERANCE", "1/1000")
    conf = load_configuration(no_env_file)
    assert conf["MAX_ORDER"] == 1000
    assert conf["ISOLATION_TOLERANCE"] == "1/1000"


def test_env_file_is_read(monkeypatch, tmp_path):
    monkeypatch.delenv("COXWL2_MAX_BALL", raising=False)
    env = tmp_path / "caps.env"
    env.write_text("COXWL2_MAX_BALL=9\n", encoding="utf-8")
    try:
        assert load_configuration(str(env))["MAX_BALL"] == 9
    finally:
        monkeypatch.delenv("COXWL2_MAX_BALL", raising=False)


def test_non_integer_cap(monkeypatch, no_env_file):
    monkeypatch.setenv("COXWL2_THREADS", "many")
    with pytest.raises(ConfigError) as info:
        load_configuration(no_env_file)
    assert info.value.code == "cli.ConfigError"


def test_low_precision_is_rejected(monkeypatch, no_env_file):
    monkeypatch.setenv("COXWL2_PRECISION_BITS", "32")
    with pytest.raises(ConfigError):
        load_configuration(no_env_file)


# ------------------------- Validation ------------------------- #

def test_validate_config(caps):
    validate_config(caps)
    with pytest.raises(ValueError):
        validate_config({**caps, "MAX_BALL": 0})
    with pytest.raises(TypeError):
        validate_config({**caps, "THREADS": "2"})
    with pytest.raises(TypeError):
        validate_config({**caps, "ISOLATION_TOLERANCE": "tiny"})
    with pytest.raises(ValueError):
        validate_config({k: v for k, v in caps.items() if k != "MAX_ORDER"})


def test_config_manager(caps):
    manager = ConfigManager({**caps, "THREADS": 4})
    assert manager.get_threads() == 4
    assert manager.get_isolation_tolerance() == Fraction(1, 10 ** 12)
    assert ConfigManager({}).get_max_ball() == DEFAULTS["MAX_BALL"]
    assert manager.caps()["threads"] == 4


# ------------------------- Run configuration ------------------------- #

def test_overrides_win(caps, mocker):
    logger = mocker.Mock()
    runtime = initialize_run(caps, {"command": "census", "max_order": 50, "threads": None}, logger=logger)
    run = runtime["run"]
    assert run.max_order == 50
    assert run.threads == DEFAULTS["THREADS"]
    assert runtime["config"].get_max_order() == 50
    assert runtime["logger"] is logger


def test_matrix_commands_need_input(caps, mocker):
    logger = mocker.Mock()
    with pytest.raises(ValidationError):
        initialize_run(caps, {"command": "nerve"}, logger=logger)
    logger.warning.assert_called_once()


def test_region_needs_weights(caps, mocker):
    with pytest.raises(ValidationError):
        initialize_run(caps, {"command": "region", "input": "cm.json"}, logger=mocker.Mock())


def test_unknown_option_is_rejected(caps, mocker):
    with pytest.raises(ValidationError):
        initialize_run(caps, {"command": "census", "colour": "red"}, logger=mocker.Mock())
