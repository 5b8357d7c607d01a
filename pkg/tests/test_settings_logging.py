# tests/test_settings_logging.py
import json
import logging

import numpy as np
import pytest
from pydantic import ValidationError

from libs.config.settings import HARD_MAX_CARRIER, get_settings
from libs.constructions.generators import gen_modring
from libs.errors import ConfigError, SizeCapError
from libs.logging.structured_logger import StructuredLogger


def test_defaults():
    settings = get_settings()
    assert settings.max_carrier == HARD_MAX_CARRIER
    assert settings.max_table_entries == 2**26
    assert settings.quotient_seed == 0x5EED


def test_env_can_tighten_caps(env):
    env("SNR_MAX_CARRIER", "4")
    assert get_settings().max_carrier == 4
    gen_modring(4, 2, 2)
    with pytest.raises(SizeCapError):
        gen_modring(5, 2, 2)


def test_env_accepts_hex(env):
    env("SNR_QUOTIENT_SEED", "0x10")
    assert get_settings().quotient_seed == 16


@pytest.mark.parametrize(
    "name,value",
    [
        ("SNR_MAX_CARRIER", "65"),
        ("SNR_MAX_TABLE_ENTRIES", str(2**26 + 1)),
        ("SNR_ENUM_MAX_K", "21"),
        ("SNR_CONGRUENCE_MAX_K", "0"),
    ],
)
def test_env_cannot_loosen_caps(env, name, value):
    env(name, value)
    with pytest.raises(ConfigError, match=name[4:].lower()) as exc:
        get_settings()
    assert isinstance(exc.value.__cause__, ValidationError)


@pytest.mark.parametrize(
    "name,value",
    [("SNR_ENUM_MAX_K", "abc"), ("SNR_QUOTIENT_SEED", "0xZZ"), ("LOG_LEVEL", "chatty")],
)
def test_env_garbage_is_a_config_error(env, name, value):
    env(name, value)
    with pytest.raises(ConfigError):
        get_settings()


class _Capture(logging.Handler):
    def __init__(self):
        super().__init__()
        self.records: list[str] = []

    def emit(self, record):
        self.records.append(record.getMessage())


@pytest.fixture
def captured():
    base = logging.getLogger("snr-test")
    base.setLevel(logging.DEBUG)
    handler = _Capture()
    base.addHandler(handler)
    yield StructuredLogger(base, service="snr-test", env="test"), handler
    base.removeHandler(handler)


def test_structured_logger_fields(captured):
    log, handler = captured
    log.bind_run("run-1", command="classify")
    log.info("CLASSIFY_DONE", extra={"structure": "b2", "k": 2})

    record = json.loads(handler.records[-1])
    assert record["message"] == "CLASSIFY_DONE"
    assert record["level"] == "INFO"
    assert record["service"] == "snr-test"
    assert record["env"] == "test"
    assert record["run_id"] == "run-1"
    assert record["command"] == "classify"
    assert record["extra"] == {"structure": "b2", "k": 2}


def test_structured_logger_serializes_element_sets(captured):
    log, handler = captured
    log.debug("UNITS_DONE", extra={"units": frozenset({3, 1, 2}), "k": np.int64(5)})
    record = json.loads(handler.records[-1])
    assert record["extra"] == {"units": [1, 2, 3], "k": 5}
    assert "command" not in record


def test_structured_logger_respects_level(captured):
    log, handler = captured
    logging.getLogger("snr-test").setLevel(logging.WARNING)
    log.debug("SWEEP_BLOCK")
    assert handler.records == []
    log.warning("UNITS_MULTIPLE_INVERSES", extra={"elements": [1, 2]})
    assert json.loads(handler.records[-1])["extra"]["elements"] == [1, 2]
