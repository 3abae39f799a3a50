"""Wire-log wrapper that enforces the grounding contract on every call.

Wraps any backend; each request is checked against the per-kind
image/text cardinality rules before it goes out, and a JSONL record of
what was actually sent (image digests, text counts) is appended to the
wire log. Violations raise instead of silently leaking extra context to
the model.
"""

from __future__ import annotations

import json
from pathlib import Path

from editloop.errors import GroundingViolation
from editloop.backends.base import BackendRequest, VisionBackend, check_grounding


class RecordingBackend:
    def __init__(self, inner: VisionBackend, log_path: str | Path | None = None):
        self._inner = inner
        self._log_path = Path(log_path) if log_path else None
        self.records: list[dict] = []
        self.violations: list[str] = []

    def respond(self, request: BackendRequest) -> str:
        violation = check_grounding(request)
        record = {
            "seq": len(self.records) + 1,
            "kind": request.kind.value,
            "image_digests": [img.digest() for img in request.images],
            "description_count": len(request.descriptions),
            "has_instruction": bool(request.instruction.strip()),
            "has_user_text": bool(request.user_text and request.user_text.strip()),
            "violation": violation,
        }
        self.records.append(record)
        if self._log_path is not None:
            with open(self._log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")
        if violation is not None:
            self.violations.append(violation)
            raise GroundingViolation(violation)
        return self._inner.respond(request)
