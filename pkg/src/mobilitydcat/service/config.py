"""Service configuration: config file for paths, env vars for bind address."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

HOST_ENV = "MOBILITYDCAT_HOST"
PORT_ENV = "MOBILITYDCAT_PORT"


@dataclass(frozen=True)
class ServiceConfig:
    source_registry_path: Path | None = None
    profile_path: Path | None = None  # None: bundled minimum profile
    host: str = "127.0.0.1"
    port: int = 8000

    def with_env_overrides(self) -> "ServiceConfig":
        host = os.environ.get(HOST_ENV, self.host)
        port = int(os.environ.get(PORT_ENV, self.port))
        return ServiceConfig(
            source_registry_path=self.source_registry_path,
            profile_path=self.profile_path,
            host=host,
            port=port,
        )


def load_config(path: str | Path) -> ServiceConfig:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    base = Path(path).parent

    def resolve(key: str) -> Path | None:
        if key not in payload:
            return None
        p = Path(payload[key])
        return p if p.is_absolute() else base / p

    return ServiceConfig(
        source_registry_path=resolve("sourceRegistry"),
        profile_path=resolve("profile"),
        host=payload.get("host", "127.0.0.1"),
        port=int(payload.get("port", 8000)),
    ).with_env_overrides()
