"""On-disk cache of solved skein vectors, keyed by geometry, degree and
schema version.

The cache stores the exact serialized bytes, so a hit is byte-identical to a
fresh computation; the CLI's --no-cache flag provides the cross-check path.
The directory comes from SKEINSOLVE_CACHE_DIR, falling back to the user
cache root.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .serialize import SCHEMA_VERSION

ENV_VAR = "SKEINSOLVE_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    root = Path(xdg) if xdg else Path.home() / ".cache"
    return root / "skeinsolve"


class ResultCache:
    """Directory of serialized skein vectors."""

    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path_for(self, geometry: str, max_degree: int) -> Path:
        name = f"psi-{geometry}-N{max_degree}-schema{SCHEMA_VERSION}.jsonl"
        return self.root / name

    def load(self, geometry: str, max_degree: int) -> str | None:
        path = self.path_for(geometry, max_degree)
        try:
            return path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None

    def store(self, geometry: str, max_degree: int, text: str) -> Path:
        path = self.path_for(geometry, max_degree)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
        return path
