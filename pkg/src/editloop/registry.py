"""Stable-indexed object registry.

Masks are captured once when the session starts and keep their indices for
its whole life: removal marks an entry removed, never renumbers, so "object
2" means the same region in every prompt and every transcript line. The
registry is an immutable value; updates return new registries, which is
what makes snapshot-based undo trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from editloop.errors import UnknownObjectIndex
from editloop.imaging.buffer import LabelMap
from editloop.imaging.masks import MaskRegion, mask_from_label

LIVE = "live"
REMOVED = "removed"
REMOVED_MARKER = "[removed]"


@dataclass(frozen=True)
class ObjectEntry:
    index: int
    description: str
    status: str = LIVE

    def __post_init__(self):
        if self.index <= 0:
            raise ValueError("object indices are positive")
        if self.status not in (LIVE, REMOVED):
            raise ValueError(f"bad status: {self.status}")
        if self.status == LIVE and not self.description.strip():
            raise ValueError("live objects need a nonempty description")

    @property
    def is_live(self) -> bool:
        return self.status == LIVE


@dataclass(frozen=True)
class ObjectRegistry:
    entries: tuple[ObjectEntry, ...]
    label_map: LabelMap

    def __post_init__(self):
        indices = [e.index for e in self.entries]
        if indices != sorted(set(indices)):
            raise ValueError("registry indices must be strictly increasing")
        present = set(self.label_map.indices())
        for entry in self.entries:
            if entry.is_live and entry.index not in present:
                raise ValueError(f"live object {entry.index} has no mask support")

    @classmethod
    def from_label_map(cls, label_map: LabelMap, descriptions: dict[int, str]) -> "ObjectRegistry":
        entries = tuple(
            ObjectEntry(index=i, description=descriptions.get(i, f"object {i}"))
            for i in label_map.indices()
        )
        return cls(entries=entries, label_map=label_map)

    def find(self, index: int) -> ObjectEntry | None:
        for entry in self.entries:
            if entry.index == index:
                return entry
        return None

    def get(self, index: int) -> ObjectEntry:
        entry = self.find(index)
        if entry is None:
            raise UnknownObjectIndex(f"no object with index {index}")
        return entry

    def indices(self) -> list[int]:
        return [e.index for e in self.entries]

    def live_indices(self) -> list[int]:
        return [e.index for e in self.entries if e.is_live]

    def is_live(self, index: int) -> bool:
        entry = self.find(index)
        return entry is not None and entry.is_live

    def mask(self, index: int) -> MaskRegion:
        self.get(index)
        return mask_from_label(self.label_map, index)

    def live_label_map(self) -> LabelMap:
        return self.label_map.restrict(self.live_indices())

    def mark_removed(self, index: int) -> "ObjectRegistry":
        target = self.get(index)
        entries = tuple(
            replace(e, status=REMOVED) if e.index == index else e for e in self.entries
        )
        del target
        return ObjectRegistry(entries=entries, label_map=self.label_map)

    def with_descriptions(self, updates: dict[int, str]) -> "ObjectRegistry":
        """New registry with live descriptions replaced where given."""
        entries = tuple(
            replace(e, description=updates[e.index])
            if e.is_live and e.index in updates and updates[e.index].strip()
            else e
            for e in self.entries
        )
        return ObjectRegistry(entries=entries, label_map=self.label_map)

    def render_lines(self, live_only: bool = False) -> list[str]:
        """Canonical ``Object <n>: <text>`` lines, removed entries marked."""
        lines = []
        for entry in self.entries:
            if entry.is_live:
                lines.append(f"Object {entry.index}: {entry.description}")
            elif not live_only:
                lines.append(f"Object {entry.index}: {REMOVED_MARKER}")
        return lines
