# libs/logging/structured_logger.py
from __future__ import annotations

import json
import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any

import numpy as np

DEFAULT_SERVICE = "snr-toolkit"
HANDLER_FLAG = "_snr_handler"


def _get_env() -> str:
    # 优先 ENVIRONMENT，其次 APP_ENV，默认 dev
    return os.getenv("ENVIRONMENT") or os.getenv("APP_ENV") or "dev"


def _get_service(default: str = DEFAULT_SERVICE) -> str:
    return os.getenv("SERVICE_NAME", default)


def _jsonable(value: Any) -> Any:
    # 元素集合按升序输出，numpy 标量转成 int
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


@dataclass
class RunContext:
    run_id: str | None = None
    command: str | None = None


class StructuredLogger:
    """
    JSON structured logging for library code and the CLI.

    One record per line:
    {
      "timestamp": "...",
      "level": "DEBUG",
      "service": "snr-toolkit",
      "env": "dev",
      "run_id": "...",
      "command": "classify",
      "message": "CLASSIFY_DONE",
      "extra": {"structure": "affine_3", "k": 9}
    }

    Records only reach the stdlib logger's handlers (stderr, see
    configure_logging); stdout is reserved for reports.
    """

    def __init__(self, base_logger: logging.Logger, service: str, env: str) -> None:
        self._logger = base_logger
        self._service = service
        self._env = env
        self.context = RunContext()

    @property
    def run_id(self) -> str | None:
        return self.context.run_id

    def bind_run(self, run_id: str | None, command: str | None = None) -> None:
        # 每次 CLI 调用绑定一次
        self.context = RunContext(run_id=run_id, command=command)

    def _record(self, level: str, message: str, extra: dict[str, Any] | None) -> str:
        record: dict[str, Any] = {
            "timestamp": datetime.now(tz=timezone.utc).isoformat(),
            "level": level,
            "service": self._service,
            "env": self._env,
            "run_id": self.context.run_id,
            "message": message,
        }
        if self.context.command is not None:
            record["command"] = self.context.command
        if extra:
            record["extra"] = dict(extra)
        return json.dumps(record, ensure_ascii=False, default=_jsonable)

    def _log(
        self,
        level: str,
        message: str,
        extra: dict[str, Any] | None = None,
        exc_info: bool = False,
    ) -> None:
        level_no = logging.getLevelName(level)
        # 低于阈值时不做 JSON 序列化
        if self._logger.isEnabledFor(level_no):
            self._logger.log(level_no, self._record(level, message, extra), exc_info=exc_info)

    def debug(self, message: str, *, extra: dict[str, Any] | None = None) -> None:
        self._log("DEBUG", message, extra)

    def info(self, message: str, *, extra: dict[str, Any] | None = None) -> None:
        self._log("INFO", message, extra)

    def warning(self, message: str, *, extra: dict[str, Any] | None = None) -> None:
        self._log("WARNING", message, extra)

    def error(self, message: str, *, extra: dict[str, Any] | None = None) -> None:
        self._log("ERROR", message, extra)

    def exception(self, message: str, *, extra: dict[str, Any] | None = None) -> None:
        self._log("ERROR", message, extra, exc_info=True)


def configure_logging(level: str = "WARNING") -> None:
    """One stderr handler on the service logger; calling it again only resets the level."""
    base = logging.getLogger(_get_service())
    base.setLevel(level.upper())
    if not any(getattr(h, HANDLER_FLAG, False) for h in base.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        setattr(handler, HANDLER_FLAG, True)
        base.addHandler(handler)
    base.propagate = False


def get_logger(default_service: str = DEFAULT_SERVICE) -> StructuredLogger:
    service = _get_service(default_service)
    return StructuredLogger(logging.getLogger(service), service=service, env=_get_env())


logger = get_logger()
