"""HTTP backend speaking a vision chat-completions wire format.

Vendor-agnostic: any endpoint accepting a message list with inline
base64 image attachments works. Transport failures retry with exponential
backoff (2 retries by default); 4xx responses are refusals and never
retried. Request and response bodies are logged with the API key redacted,
and temperature is pinned to the configured value (0 by default) so
repeated runs stay as stable as the endpoint allows.
"""

from __future__ import annotations

import base64
import logging
import os
import time

import httpx

from editloop.config import BackendConfig
from editloop.errors import BackendRefused, BackendUnavailable, MalformedResponse
from editloop.backends.base import BackendRequest
from editloop.imaging.fileio import image_to_png_bytes

logger = logging.getLogger(__name__)


def _compose_text(request: BackendRequest) -> str:
    parts = [request.instruction]
    for i, desc in enumerate(request.descriptions, start=1):
        parts.append(f"Context {i}:\n{desc}")
    if request.user_text:
        parts.append(request.user_text)
    return "\n\n".join(parts)


class RemoteBackend:
    def __init__(self, config: BackendConfig, client: httpx.Client | None = None):
        if not config.endpoint:
            raise ValueError("remote backend requires an endpoint URL")
        self._config = config
        self._client = client or httpx.Client(timeout=config.timeout_s)

    def _api_key(self) -> str | None:
        return os.environ.get(self._config.api_key_env)

    def build_payload(self, request: BackendRequest) -> dict:
        content: list[dict] = [{"type": "text", "text": _compose_text(request)}]
        for image in request.images:
            encoded = base64.b64encode(image_to_png_bytes(image)).decode("ascii")
            content.append(
                {
                    "type": "image_url",
                    "image_url": {"url": f"data:image/png;base64,{encoded}"},
                }
            )
        payload = {
            "messages": [{"role": "user", "content": content}],
            "temperature": self._config.temperature,
        }
        if self._config.model:
            payload["model"] = self._config.model
        return payload

    def respond(self, request: BackendRequest) -> str:
        payload = self.build_payload(request)
        headers = {}
        key = self._api_key()
        if key:
            headers["Authorization"] = f"Bearer {key}"
        logger.debug(
            "backend request kind=%s images=%d api_key=%s",
            request.kind.value,
            len(request.images),
            "<redacted>" if key else "<none>",
        )

        attempts = self._config.retries + 1
        last_error: Exception | None = None
        for attempt in range(attempts):
            if attempt > 0:
                time.sleep(0.5 * (2 ** (attempt - 1)))
            try:
                response = self._client.post(
                    self._config.endpoint, json=payload, headers=headers
                )
            except httpx.HTTPError as exc:
                last_error = exc
                logger.warning("backend transport error (attempt %d): %s", attempt + 1, exc)
                continue
            if 400 <= response.status_code < 500:
                raise BackendRefused(
                    f"backend refused with HTTP {response.status_code}: {response.text[:200]}"
                )
            if response.status_code != 200:
                last_error = BackendUnavailable(
                    f"backend returned HTTP {response.status_code}"
                )
                logger.warning("backend HTTP %d (attempt %d)", response.status_code, attempt + 1)
                continue
            try:
                data = response.json()
                text = data["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError, ValueError) as exc:
                raise MalformedResponse(f"unexpected backend response shape: {exc}") from exc
            logger.debug("backend response kind=%s chars=%d", request.kind.value, len(text))
            return text
        raise BackendUnavailable(f"backend unreachable after {attempts} attempts: {last_error}")
