"""Routing result types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from editloop.ops.actions import EditAction


@dataclass(frozen=True)
class ObjectRef:
    """How the prompt referred to its object: by index, by name, or not at all."""

    kind: str                 # "index" | "name" | "none"
    index: int | None = None
    name: str | None = None

    def __post_init__(self):
        if self.kind not in ("index", "name", "none"):
            raise ValueError(f"bad object reference kind: {self.kind}")
        if self.kind == "index" and self.index is None:
            raise ValueError("index reference needs an index")
        if self.kind == "name" and not self.name:
            raise ValueError("name reference needs a name")

    @classmethod
    def by_index(cls, index: int) -> "ObjectRef":
        return cls("index", index=index)

    @classmethod
    def by_name(cls, name: str) -> "ObjectRef":
        return cls("name", name=name)

    @classmethod
    def none(cls) -> "ObjectRef":
        return cls("none")

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind}
        if self.index is not None:
            data["index"] = self.index
        if self.name is not None:
            data["name"] = self.name
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ObjectRef":
        return cls(data["kind"], index=data.get("index"), name=data.get("name"))


@dataclass(frozen=True)
class EditIntent:
    """A parsed edit instruction, optionally grounded to a registry object."""

    action: EditAction
    object_ref: ObjectRef
    resolved_index: int | None = None

    def with_resolution(self, index: int | None) -> "EditIntent":
        return EditIntent(self.action, self.object_ref, resolved_index=index)

    def to_dict(self) -> dict[str, Any]:
        return {
            "action": self.action.to_dict(),
            "object_ref": self.object_ref.to_dict(),
            "resolved_index": self.resolved_index,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EditIntent":
        return cls(
            action=EditAction.from_dict(data["action"]),
            object_ref=ObjectRef.from_dict(data["object_ref"]),
            resolved_index=data.get("resolved_index"),
        )


@dataclass(frozen=True)
class RoutedPrompt:
    """Outcome of routing one raw prompt."""

    kind: str                 # "question" | "edit"
    raw_text: str
    intent: EditIntent | None = None
    tier: str = "rules"       # which classifier decided: "backend" | "rules"

    def __post_init__(self):
        if self.kind == "edit" and self.intent is None:
            raise ValueError("edit routing requires a complete intent")
