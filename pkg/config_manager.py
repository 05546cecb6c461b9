"""
Configuration Manager for the iSchur toolkit
Desk-scale caps, worker threads and the data directory: built-in defaults,
then ischur_config.json, then environment variables (.env is honoured).
"""

import json
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

import jsonschema
from dotenv import load_dotenv

from errors import CapExceededError
from json_codec import CONFIG_SCHEMA

load_dotenv()

CONFIG_FILE = "ischur_config.json"
DEFAULT_DATA_DIR = "./ischur_data"

DEFAULT_CONFIG = {
    "max_n": 4,
    "max_r": 4,
    "max_basis": 10000,
    "max_group_rank": 5,
    "threads": 1,
    "default_jbox": 1,
    "output_dir": "tables",
}

# Keys the Settings page and update_setting may change, with their types
SETTING_TYPES = {
    "max_n": int,
    "max_r": int,
    "max_basis": int,
    "max_group_rank": int,
    "threads": int,
    "default_jbox": int,
    "output_dir": str,
}

# Smallest allowed value per integer setting (1 unless listed)
SETTING_MINIMUMS = {"default_jbox": 0}

# Desk-scale ceilings; the caps may be lowered but never raised past these
SETTING_MAXIMUMS = {"max_n": 4, "max_r": 4, "max_basis": 10000, "max_group_rank": 5, "default_jbox": 3}


def get_base_data_dir() -> str:
    """ISCHUR_DATA_DIR if set, otherwise ./ischur_data"""
    return os.environ.get("ISCHUR_DATA_DIR") or DEFAULT_DATA_DIR


def get_config_path() -> str:
    return os.path.join(get_base_data_dir(), CONFIG_FILE)


def ensure_data_dir_exists():
    Path(get_base_data_dir()).mkdir(parents=True, exist_ok=True)


def describe_data_dir():
    """Print where configuration and tables live (stderr)"""
    base = get_base_data_dir()
    print(f"📁 iSchur data directory: {os.path.abspath(base)}", file=sys.stderr)
    if os.path.exists(base):
        print("   ✅ Directory exists", file=sys.stderr)
    else:
        print("   ⚠️  Will be created on first save", file=sys.stderr)


def _apply_environment(config: Dict) -> Dict:
    threads = os.environ.get("ISCHUR_THREADS")
    if threads:
        try:
            config["threads"] = max(1, int(threads))
        except ValueError:
            print(f"⚠️  Ignoring ISCHUR_THREADS={threads!r}: not an integer", file=sys.stderr)
    return config


def load_config() -> Dict:
    """
    Load the effective configuration.

    A missing file means defaults; an unreadable or invalid file is reported on
    stderr and also falls back to the defaults.
    """
    config = DEFAULT_CONFIG.copy()
    config_path = get_config_path()

    if os.path.exists(config_path):
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                stored = json.load(f)
            jsonschema.validate(stored, CONFIG_SCHEMA)
            config.update({k: v for k, v in stored.items() if k in DEFAULT_CONFIG})
        except (OSError, json.JSONDecodeError, jsonschema.ValidationError) as e:
            print(f"❌ Error loading {config_path}: {e}; using defaults", file=sys.stderr)

    return _apply_environment(config)


def save_config(config: Dict):
    """Validate and write ischur_config.json"""
    stored = {k: config[k] for k in DEFAULT_CONFIG if k in config}
    jsonschema.validate(stored, CONFIG_SCHEMA)
    stored["last_updated"] = datetime.now().isoformat()

    ensure_data_dir_exists()
    with open(get_config_path(), "w", encoding="utf-8") as f:
        json.dump(stored, f, indent=2, ensure_ascii=False)


def update_setting(key: str, value: Any) -> Dict:
    """
    Change one setting and save it.

    Raises:
        ValueError: on an unknown key, a wrongly typed value or a value outside its range
    """
    if key not in SETTING_TYPES:
        raise ValueError(f"Unknown setting: {key}")
    expected = SETTING_TYPES[key]
    if not isinstance(value, expected) or isinstance(value, bool):
        raise ValueError(f"Setting {key} must be of type {expected.__name__}")
    minimum = SETTING_MINIMUMS.get(key, 1)
    if expected is int and value < minimum:
        raise ValueError(f"Setting {key} must be at least {minimum}")
    maximum = SETTING_MAXIMUMS.get(key)
    if maximum is not None and value > maximum:
        raise ValueError(f"Setting {key} must be at most {maximum}")

    config = load_config()
    config[key] = value
    save_config(config)
    return config


def get_threads() -> int:
    return load_config()["threads"]


def get_caps() -> Dict[str, int]:
    config = load_config()
    return {k: config[k] for k in ("max_n", "max_r", "max_basis", "max_group_rank")}


def check_caps(n: int, r: int, caps: Dict[str, int] = None):
    """
    Raises:
        CapExceededError: if n, r or the basis size is over its cap
    """
    from schur import basis_size

    caps = caps or get_caps()
    if n > caps["max_n"]:
        raise CapExceededError(f"n={n} exceeds the cap max_n={caps['max_n']}")
    if r > caps["max_r"]:
        raise CapExceededError(f"r={r} exceeds the cap max_r={caps['max_r']}")
    if r > caps["max_group_rank"]:
        raise CapExceededError(f"r={r} exceeds the Weyl group cap max_group_rank={caps['max_group_rank']}")
    size = basis_size(n, r)
    if size > caps["max_basis"]:
        raise CapExceededError(f"|Xi| = {size} at (n, r) = ({n}, {r}) exceeds max_basis={caps['max_basis']}")


def get_output_dir() -> str:
    """Directory for structure-constant tables, inside the data directory unless absolute"""
    out = load_config()["output_dir"]
    return out if os.path.isabs(out) else os.path.join(get_base_data_dir(), out)
