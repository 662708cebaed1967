"""On-disk store of solved Murphy combinations, one JSON file per cycle type."""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1
ENV_VAR = "HECKE_CACHE_DIR"

log = logging.getLogger(__name__)


def default_cache_dir() -> Path | None:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


class ComboCache:
    """Directory of `<lengths>.json` files such as `1-2.json` or `empty.json`."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, lengths: tuple[int, ...]) -> Path:
        name = "-".join(map(str, lengths)) or "empty"
        return self.root / f"{name}.json"

    def load(self, lengths: tuple[int, ...]) -> dict | None:
        path = self._path(lengths)
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if data.get("schema") != SCHEMA_VERSION or tuple(data.get("lengths", ())) != tuple(lengths):
            return None
        return data["combo"]

    def store(self, lengths: tuple[int, ...], combo: dict) -> None:
        path = self._path(lengths)
        payload = json.dumps({"schema": SCHEMA_VERSION, "lengths": list(lengths), "combo": combo}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def entries(self) -> list[Path]:
        return sorted(self.root.glob("*.json"))
