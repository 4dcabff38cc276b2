"""On-disk JSON cache of Betti tables, keyed by canonical ideal and field."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from .betti import BettiTable


class ResultCache:
    """One JSON file per key. Writes go through a temp file and ``os.replace``,
    so concurrent readers see either nothing or a complete entry."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()[:32]
        return self.directory / f"{digest}.json"

    def get(self, key: str) -> Optional[BettiTable]:
        path = self._path(key)
        try:
            data = json.loads(path.read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if data.get("key") != key:
            return None
        return BettiTable.from_json(data["table"])

    def put(self, key: str, table: BettiTable) -> None:
        payload = json.dumps({"key": key, "table": table.to_json(multigraded=True)}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def __len__(self) -> int:
        return sum(1 for _ in self.directory.glob("*.json"))
