"""Deterministic scripted backend for tests and replays.

A script is an ordered list of matcher/response entries. Each incoming
request is answered by the first not-yet-exhausted entry whose kind (and
optional ``contains`` text) matches; anything unmatched is an error, never
an improvised answer. Consumption order is logged so replay harnesses can
assert the script ran exactly as expected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from editloop.errors import UnmatchedScriptRequest
from editloop.backends.base import BackendRequest, RequestKind


@dataclass
class ScriptEntry:
    kind: RequestKind
    response: str
    contains: str | None = None
    max_uses: int = 1
    uses: int = 0

    def matches(self, request: BackendRequest) -> bool:
        if self.uses >= self.max_uses:
            return False
        if request.kind != self.kind:
            return False
        if self.contains is not None:
            haystack = (request.user_text or "") + "\n" + request.instruction
            return self.contains.lower() in haystack.lower()
        return True


@dataclass
class ScriptedMock:
    entries: list[ScriptEntry]
    consumption_log: list[int] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ScriptedMock":
        if data.get("version") != 1:
            raise ValueError(f"unsupported mock script version: {data.get('version')}")
        entries = []
        for raw in data["entries"]:
            match = raw.get("match", {})
            entries.append(
                ScriptEntry(
                    kind=RequestKind(raw["kind"]),
                    response=raw["response"],
                    contains=match.get("contains"),
                    max_uses=raw.get("max_uses", 1),
                )
            )
        return cls(entries=entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "ScriptedMock":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def respond(self, request: BackendRequest) -> str:
        for i, entry in enumerate(self.entries):
            if entry.matches(request):
                entry.uses += 1
                self.consumption_log.append(i)
                return entry.response
        raise UnmatchedScriptRequest(
            f"no script entry matches request kind={request.kind.value!r} "
            f"user_text={request.user_text!r}"
        )

    def fully_consumed(self) -> bool:
        return all(entry.uses >= 1 for entry in self.entries)

    def unused_entries(self) -> list[int]:
        return [i for i, entry in enumerate(self.entries) if entry.uses == 0]
