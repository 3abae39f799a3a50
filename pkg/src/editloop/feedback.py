"""Verification feedback: the four texts produced after every edit.

Call order is summary, general description, object descriptions, then the
judgement, because the judgement consumes the fresh descriptions. A failed
sub-request degrades to an explicit "unavailable" marker instead of
aborting: the edit itself already succeeded deterministically and the user
keeps undo either way. Presentation order in chat is fixed: summary,
judgement, general, objects.

Edits that target no object (text placed at an anchor) carry the previous
object descriptions forward verbatim instead of re-describing anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from editloop.errors import BackendRefused, BackendUnavailable
from editloop.backends import base as backend_ops
from editloop.backends.base import VisionBackend
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.som import render_som_overlay
from editloop.registry import REMOVED_MARKER, ObjectRegistry

SUMMARY_TITLE = "Summary of Visual Changes"
JUDGEMENT_TITLE = "AI Judgement"
GENERAL_TITLE = "Updated General Description"
OBJECTS_TITLE = "Updated Object Descriptions"


def unavailable_marker(title: str) -> str:
    return f"[{title} unavailable]"


@dataclass(frozen=True)
class VerificationBundle:
    """The four feedback texts for one edit.

    ``objects`` covers every index the session has ever had: live objects
    carry their description, removed ones carry None.
    """

    summary: str
    judgement: str
    general: str
    objects: tuple[tuple[int, str | None], ...]

    def object_lines(self) -> list[str]:
        return [
            f"Object {index}: {text if text is not None else REMOVED_MARKER}"
            for index, text in self.objects
        ]

    def objects_text(self) -> str:
        return "\n".join(self.object_lines())

    def to_dict(self) -> dict[str, Any]:
        return {
            "summary": self.summary,
            "judgement": self.judgement,
            "general": self.general,
            "objects": [[index, text] for index, text in self.objects],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerificationBundle":
        return cls(
            summary=data["summary"],
            judgement=data["judgement"],
            general=data["general"],
            objects=tuple((int(i), t) for i, t in data["objects"]),
        )


def generate_verification(
    backend: VisionBackend,
    before: ImageBuffer,
    after: ImageBuffer,
    registry_after: ObjectRegistry,
    prev_general: str,
    prev_objects_text: str,
    instruction: str,
    object_targeted: bool,
    carried_objects: tuple[tuple[int, str | None], ...],
) -> tuple[VerificationBundle, bool]:
    """Produce the bundle; returns (bundle, fresh object descriptions?)."""
    try:
        summary = backend_ops.summary_of_changes(backend, before, after)
    except (BackendUnavailable, BackendRefused):
        summary = unavailable_marker(SUMMARY_TITLE)

    try:
        general = backend_ops.general_description(backend, after)
    except (BackendUnavailable, BackendRefused):
        general = unavailable_marker(GENERAL_TITLE)

    objects_refreshed = False
    if not object_targeted:
        objects = carried_objects
    else:
        live = registry_after.live_indices()
        try:
            if live:
                som = render_som_overlay(after, registry_after.live_label_map())
                described = dict(backend_ops.object_descriptions(backend, som, live))
            else:
                described = {}
            objects = tuple(
                (entry.index, described[entry.index] if entry.is_live else None)
                for entry in registry_after.entries
            )
            objects_refreshed = True
        except (BackendUnavailable, BackendRefused):
            objects = tuple(
                (entry.index, unavailable_marker(OBJECTS_TITLE) if entry.is_live else None)
                for entry in registry_after.entries
            )

    new_objects_text = "\n".join(
        f"Object {index}: {text if text is not None else REMOVED_MARKER}"
        for index, text in objects
    ) or "(no objects)"
    try:
        judgement = backend_ops.judgement(
            backend,
            before,
            after,
            prev_general,
            prev_objects_text or "(no objects)",
            general,
            new_objects_text,
            instruction,
        )
    except (BackendUnavailable, BackendRefused):
        judgement = unavailable_marker(JUDGEMENT_TITLE)

    bundle = VerificationBundle(
        summary=summary, judgement=judgement, general=general, objects=objects
    )
    return bundle, objects_refreshed
