import json
import os

import pytest

import config_manager
from config_manager import (
    DEFAULT_CONFIG,
    check_caps,
    get_caps,
    get_config_path,
    get_output_dir,
    get_threads,
    load_config,
    update_setting,
)
from errors import CapExceededError


def test_defaults_without_file():
    assert load_config() == DEFAULT_CONFIG
    assert not os.path.exists(get_config_path())


def test_threads_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("ISCHUR_THREADS", "3")
    assert get_threads() == 3
    monkeypatch.setenv("ISCHUR_THREADS", "many")
    assert get_threads() == DEFAULT_CONFIG["threads"]
    assert "ISCHUR_THREADS" in capsys.readouterr().err


def test_update_setting_persists():
    update_setting("max_r", 3)
    assert load_config()["max_r"] == 3
    with open(get_config_path(), encoding="utf-8") as f:
        stored = json.load(f)
    assert stored["max_r"] == 3
    assert "last_updated" in stored


def test_environment_overrides_file(monkeypatch):
    update_setting("threads", 2)
    monkeypatch.setenv("ISCHUR_THREADS", "4")
    assert get_threads() == 4


@pytest.mark.parametrize("key,value", [
    ("colour", 1),
    ("max_n", "4"),
    ("max_n", 0),
    ("max_n", 5),
    ("max_r", 9),
    ("max_basis", 10001),
    ("max_group_rank", 6),
    ("default_jbox", 4),
    ("threads", True),
    ("output_dir", 5),
])
def test_update_setting_rejects(key, value):
    with pytest.raises(ValueError):
        update_setting(key, value)


def test_invalid_file_falls_back(capsys):
    config_manager.ensure_data_dir_exists()
    with open(get_config_path(), "w", encoding="utf-8") as f:
        json.dump({"max_n": "lots"}, f)
    assert load_config() == DEFAULT_CONFIG
    assert "❌" in capsys.readouterr().err


def test_check_caps():
    check_caps(2, 2)
    caps = get_caps()
    with pytest.raises(CapExceededError):
        check_caps(caps["max_n"] + 1, 1)
    with pytest.raises(CapExceededError):
        check_caps(1, caps["max_r"] + 1)
    with pytest.raises(CapExceededError):
        check_caps(2, 2, {"max_n": 4, "max_r": 4, "max_basis": 10, "max_group_rank": 5})


def test_output_dir_inside_data_dir(isolated_data_dir):
    assert get_output_dir() == os.path.join(str(isolated_data_dir), "tables")


def test_jbox_may_be_zero():
    assert update_setting("default_jbox", 0)["default_jbox"] == 0
    with pytest.raises(ValueError):
        update_setting("default_jbox", -1)


def test_caps_above_ceiling_in_file_fall_back(capsys):
    config_manager.ensure_data_dir_exists()
    with open(get_config_path(), "w", encoding="utf-8") as f:
        json.dump({"max_n": 8}, f)
    assert load_config()["max_n"] == DEFAULT_CONFIG["max_n"]
    assert "❌" in capsys.readouterr().err


def test_ceilings_are_accepted():
    for key, ceiling in config_manager.SETTING_MAXIMUMS.items():
        assert update_setting(key, ceiling)[key] == ceiling
