# -*- coding: utf-8 -*-
"""
Configuration Parameters
========================
Namespaced key/value settings, read in this order (later wins):

  1. DEFAULTS below
  2. an optional YAML file (SUPERTENSOR_CONFIG or the CLI --config flag)
  3. environment variables listed in ENV_KEYS
  4. explicit set_param() calls (the CLI uses these for its global flags)
"""

import logging
import os

import yaml

_logger = logging.getLogger(__name__)

# ── Configuration ─────────────────────────────────────────────────────────────

DEFAULTS = {
    "supertensor.seed": 7,
    "supertensor.no_parallel": False,
    "supertensor.workers": 0,  # 0 → os.cpu_count()
    "supertensor.basis_cap": 200,
    "supertensor.log_level": "WARNING",
}

ENV_KEYS = {
    "supertensor.seed": "SUPERTENSOR_SEED",
    "supertensor.no_parallel": "SUPERTENSOR_NO_PARALLEL",
    "supertensor.workers": "SUPERTENSOR_WORKERS",
    "supertensor.log_level": "SUPERTENSOR_LOG_LEVEL",
}

_TRUE = {"1", "true", "yes", "on"}


def _coerce(key, raw):
    default = DEFAULTS.get(key)
    if isinstance(default, bool):
        return str(raw).strip().lower() in _TRUE
    if isinstance(default, int):
        return int(raw)
    return raw


class ConfigParameter:
    """Process-wide parameter store."""

    def __init__(self):
        self._file_values = {}
        self._overrides = {}
        self.reset()

    def load_file(self, path):
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError:
            _logger.warning(f"Config file not found: {path}")
            return
        section = data.get("supertensor", data)
        for name, value in section.items():
            key = name if name.startswith("supertensor.") else f"supertensor.{name}"
            self._file_values[key] = _coerce(key, value)
        _logger.info(f"Loaded {len(section)} config values from {path}")

    def get_param(self, key, default=None):
        if key in self._overrides:
            return self._overrides[key]
        env_name = ENV_KEYS.get(key)
        if env_name and os.environ.get(env_name) not in (None, ""):
            try:
                return _coerce(key, os.environ[env_name])
            except ValueError:
                _logger.warning(f"Ignoring malformed {env_name}={os.environ[env_name]!r}")
        if key in self._file_values:
            return self._file_values[key]
        return DEFAULTS.get(key, default)

    def set_param(self, key, value):
        self._overrides[key] = _coerce(key, value)

    def reset(self):
        """Drop overrides and file values, then re-read SUPERTENSOR_CONFIG."""
        self._overrides.clear()
        self._file_values.clear()
        path = os.environ.get("SUPERTENSOR_CONFIG")
        if path:
            self.load_file(path)


config = ConfigParameter()
get_param = config.get_param
set_param = config.set_param
