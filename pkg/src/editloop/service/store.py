"""Directory-per-session persistence.

Each session directory holds the original image, the label map, one
lossless PNG per surviving edit, the transcript document, and the wire
log. Restoring a session never calls a backend: images come from disk and
all text (descriptions, verification, chat) comes from the transcript, so
a restarted service serves byte-identical reads.
"""

from __future__ import annotations

import shutil
from pathlib import Path

from editloop.config import EngineConfig
from editloop.errors import UnreadableFile
from editloop.backends.base import VisionBackend
from editloop.feedback import VerificationBundle
from editloop.imaging.fileio import (
    load_image,
    load_label_map,
    save_image_png,
    save_label_map_png,
)
from editloop.registry import ObjectRegistry
from editloop.routing.types import EditIntent
from editloop.session import ChatEntry, EditRecord, EditSession
from editloop.transcript import build_transcript, load_transcript, save_transcript


class SessionStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def session_dir(self, session_id: str) -> Path:
        return self.root / session_id

    def wire_log_path(self, session_id: str) -> Path:
        return self.session_dir(session_id) / "wire-log.jsonl"

    def prepare(self, session_id: str) -> Path:
        path = self.session_dir(session_id)
        path.mkdir(parents=True, exist_ok=True)
        return path

    def discard(self, session_id: str) -> None:
        path = self.session_dir(session_id)
        if path.exists():
            shutil.rmtree(path)

    def list_ids(self) -> list[str]:
        if not self.root.exists():
            return []
        return sorted(
            p.name for p in self.root.iterdir() if (p / "transcript.json").exists()
        )

    def exists(self, session_id: str) -> bool:
        return (self.session_dir(session_id) / "transcript.json").exists()

    def save(self, session: EditSession) -> None:
        path = self.prepare(session.session_id)
        original = path / "original.png"
        if not original.exists():
            save_image_png(session.original, original)
        labels = path / "labels.png"
        if not labels.exists():
            save_label_map_png(session.initial_registry.label_map, labels)
        for record in session.history:
            snapshot = path / f"edit-{record.seq:04d}.png"
            save_image_png(record.image_after, snapshot)
        # Drop snapshots past the live history (shrunk by a branch edit).
        for stale in path.glob("edit-*.png"):
            seq = int(stale.stem.split("-")[1])
            if seq > len(session.history):
                stale.unlink()
        save_transcript(build_transcript(session), path / "transcript.json")

    def load(
        self,
        session_id: str,
        backend: VisionBackend,
        config: EngineConfig | None = None,
    ) -> EditSession:
        path = self.session_dir(session_id)
        transcript = load_transcript(path / "transcript.json")

        original = load_image(path / "original.png")
        if original.digest() != transcript["image"]["digest"]:
            raise UnreadableFile(f"stored original for {session_id} does not match transcript")
        label_map = load_label_map(path / "labels.png")
        if label_map.digest() != transcript["label_map_digest"]:
            raise UnreadableFile(f"stored label map for {session_id} does not match transcript")

        config = config or EngineConfig.from_dict(transcript["config"])
        registry = ObjectRegistry.from_label_map(
            label_map, {int(i): d for i, d in transcript["initial"]["objects"]}
        )
        session = EditSession(
            session_id=session_id,
            config=config,
            backend=backend,
            original=original,
            registry=registry,
            initial_general=transcript["initial"]["general"],
        )

        # Rebuild history symbolically: surviving edit events, cursor moves.
        surviving: list[dict] = []
        cursor = 0
        for event in transcript["events"]:
            if event["type"] == "edit":
                del surviving[cursor:]
                surviving.append(event)
                cursor = len(surviving)
            elif event["type"] == "undo":
                cursor -= 1
            elif event["type"] == "redo":
                cursor += 1

        history: list[EditRecord] = []
        snapshots = [original]
        current_registry = registry
        current_general = transcript["initial"]["general"]
        for event in surviving:
            seq = len(history) + 1
            after = load_image(path / f"edit-{seq:04d}.png")
            if after.digest() != event["after_digest"]:
                raise UnreadableFile(
                    f"stored snapshot {seq} for {session_id} does not match transcript"
                )
            intent = EditIntent.from_dict(event["intent"])
            bundle = VerificationBundle.from_dict(event["verification"])
            registry_before = current_registry
            registry_after = registry_before
            if intent.action.kind.value == "remove" and intent.resolved_index is not None:
                registry_after = registry_after.mark_removed(intent.resolved_index)
            if event["objects_refreshed"]:
                registry_after = registry_after.with_descriptions(
                    {i: t for i, t in bundle.objects if t is not None}
                )
            record = EditRecord(
                seq=seq,
                prompt=event["prompt"],
                intent=intent,
                tier=event["tier"],
                image_before=snapshots[-1],
                image_after=after,
                registry_before=registry_before,
                registry_after=registry_after,
                general_before=current_general,
                general_after=event["general_after"],
                verification=bundle,
                objects_refreshed=event["objects_refreshed"],
            )
            history.append(record)
            snapshots.append(after)
            current_registry = registry_after
            current_general = event["general_after"]

        session.history = history
        session.snapshots = snapshots
        session.cursor = transcript["cursor"]
        session.chat = [ChatEntry.from_dict(e) for e in transcript["chat"]]
        session.events = list(transcript["events"])
        return session
