"""On-disk memo of character values, keyed by canonical form."""

from __future__ import annotations

import os
import tempfile
import threading
import warnings
from fractions import Fraction

HEADER = "qpehr-cache\tv1"


class ValueCache:
    """Versioned TSV file ``KIND<TAB>key-hex<TAB>fraction``.

    Loaded lazily on first lookup; a malformed file is dropped with a
    warning.  ``save`` writes a temporary file and renames it over the
    target so readers never see a partial file.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._data: dict[tuple[str, bytes], Fraction] | None = None
        self._dirty = False
        self._lock = threading.Lock()

    def _load(self) -> dict:
        if self._data is not None:
            return self._data
        data: dict = {}
        try:
            with open(self.path, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except FileNotFoundError:
            lines = None
        if lines is not None:
            try:
                if not lines or lines[0] != HEADER:
                    raise ValueError("missing or unknown header")
                for line in lines[1:]:
                    if not line:
                        continue
                    kind, key, value = line.split("\t")
                    data[(kind, bytes.fromhex(key))] = Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                warnings.warn(f"discarding corrupt cache {self.path}: {exc}", stacklevel=2)
                data = {}
                self._dirty = True
        self._data = data
        return data

    def get(self, kind: str, key: bytes) -> Fraction | None:
        with self._lock:
            return self._load().get((kind, key))

    def put(self, kind: str, key: bytes, value) -> None:
        with self._lock:
            data = self._load()
            if data.get((kind, key)) != value:
                data[(kind, key)] = Fraction(value)
                self._dirty = True

    def __len__(self) -> int:
        with self._lock:
            return len(self._load())

    def save(self) -> None:
        with self._lock:
            if not self._dirty or self._data is None:
                return
            lines = [HEADER] + [f"{k}\t{key.hex()}\t{v}"
                                for (k, key), v in sorted(self._data.items())]
            folder = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(folder, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=folder, prefix=".qpehr-cache-")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write("\n".join(lines) + "\n")
                os.replace(tmp, self.path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
            self._dirty = False
