"""Content-addressed response cache.

Responses are stored one file per request under the cache directory,
keyed by a hash of (role, template, slots, seed). Writes go through a
temp file and an atomic rename so concurrent evaluation workers never
see a torn entry. With the cache on, the returned text is identical on
hit and miss; only the provider tag differs.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .base import OracleRequest, OracleResponse


def request_key(req: OracleRequest) -> str:
    canonical = json.dumps(
        {"role": req.role, "template": req.template_id,
         "slots": dict(sorted(req.slots.items())), "seed": req.seed},
        sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class CachedOracle:
    def __init__(self, inner, cache_dir: str | Path):
        self.inner = inner
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def complete(self, req: OracleRequest) -> OracleResponse:
        path = self._path(request_key(req))
        if path.exists():
            entry = json.loads(path.read_text(encoding="utf-8"))
            return OracleResponse(text=entry["text"], provider="cache")
        response = self.inner.complete(req)
        payload = json.dumps({"role": req.role, "text": response.text},
                             ensure_ascii=False)
        tmp = path.with_suffix(f".tmp.{os.getpid()}")
        tmp.write_text(payload, encoding="utf-8")
        os.replace(tmp, path)
        return response
