"""Chat-completion HTTP backend.

Speaks the common chat-completion wire shape: POST a model name and a
message list, read choices[0].message.content. Endpoint, key, and model
come from arguments or the SAFEPLAN_ORACLE_* environment variables.
"""

from __future__ import annotations

import os
import time

import httpx

from ..errors import HttpError
from .base import OracleRequest, OracleResponse
from .templates import fill_template, load_template

ENV_ENDPOINT = "SAFEPLAN_ORACLE_ENDPOINT"
ENV_KEY = "SAFEPLAN_ORACLE_KEY"
ENV_MODEL = "SAFEPLAN_ORACLE_MODEL"

DEFAULT_TIMEOUT_S = 60.0


class HttpOracle:
    def __init__(self, endpoint: str | None = None, api_key: str | None = None,
                 model: str | None = None, template_dir: str | None = None,
                 timeout_s: float = DEFAULT_TIMEOUT_S,
                 transport: httpx.BaseTransport | None = None):
        self.endpoint = endpoint or os.environ.get(ENV_ENDPOINT)
        self.api_key = api_key or os.environ.get(ENV_KEY)
        self.model = model or os.environ.get(ENV_MODEL, "")
        self.template_dir = template_dir
        if not self.endpoint:
            raise HttpError(f"no oracle endpoint; set {ENV_ENDPOINT} or pass one")
        self._client = httpx.Client(timeout=timeout_s, transport=transport)

    def close(self) -> None:
        self._client.close()

    def complete(self, req: OracleRequest) -> OracleResponse:
        req.require_slots()
        prompt = fill_template(load_template(req.role, self.template_dir), req.slots)
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
            headers["api-key"] = self.api_key
        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": 0,
            "seed": req.seed,
        }
        started = time.monotonic()
        try:
            response = self._client.post(self.endpoint, json=payload, headers=headers)
        except httpx.HTTPError as exc:
            raise HttpError(f"oracle request failed: {exc}") from None
        latency_ms = int((time.monotonic() - started) * 1000)
        if response.status_code != 200:
            raise HttpError(f"oracle returned HTTP {response.status_code}: "
                            f"{response.text[:200]}")
        try:
            text = response.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise HttpError(f"malformed oracle response: {exc}") from None
        if not isinstance(text, str) or not text:
            raise HttpError("oracle returned empty text")
        return OracleResponse(text=text, provider="http", latency_ms=latency_ms)
