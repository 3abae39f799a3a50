"""Session lifecycle and per-session write serialization.

All state lives in the store; the manager only caches live EditSession
objects and their locks. One prompt at a time runs per session (writers
queue FIFO up to the configured depth, then the request is rejected);
distinct sessions proceed fully in parallel. Every successful mutation is
flushed to the store before returning, so a restarted service reloads an
identical view.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from editloop.config import EngineConfig
from editloop.errors import EngineError, UnreadableFile
from editloop.backends.base import VisionBackend
from editloop.backends.recording import RecordingBackend
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.fileio import image_to_png_bytes, load_image, load_label_map
from editloop.service.store import SessionStore
from editloop.session import EditSession, PromptOutcome, start_session


class UnknownSession(EngineError):
    kind = "unknown_session"


class UnknownImageVersion(EngineError):
    kind = "unknown_image_version"


class PromptQueueFull(EngineError):
    kind = "prompt_queue_full"


@dataclass
class _Managed:
    session: EditSession
    lock: threading.Lock = field(default_factory=threading.Lock)
    waiting: int = 0
    counter_lock: threading.Lock = field(default_factory=threading.Lock)


class SessionManager:
    def __init__(
        self,
        store: SessionStore,
        backend: VisionBackend,
        config: EngineConfig | None = None,
        segmentation_provider=None,
    ):
        self._store = store
        self._backend = backend
        self._config = config or EngineConfig()
        self._segmentation = segmentation_provider
        self._sessions: dict[str, _Managed] = {}
        self._registry_lock = threading.Lock()

    # --- lookup -------------------------------------------------------------

    def _get(self, session_id: str) -> _Managed:
        with self._registry_lock:
            managed = self._sessions.get(session_id)
            if managed is not None:
                return managed
            if not self._store.exists(session_id):
                raise UnknownSession(f"no session {session_id!r}")
            backend = RecordingBackend(
                self._backend, self._store.wire_log_path(session_id)
            )
            session = self._store.load(session_id, backend)
            managed = _Managed(session=session)
            self._sessions[session_id] = managed
            return managed

    def session(self, session_id: str) -> EditSession:
        return self._get(session_id).session

    # --- lifecycle ----------------------------------------------------------

    def create_session(
        self, image_bytes: bytes, label_map_bytes: bytes | None
    ) -> EditSession:
        image = load_image(image_bytes)
        label_map = load_label_map(label_map_bytes) if label_map_bytes else None

        session_id = uuid.uuid4().hex[:12]
        self._store.prepare(session_id)
        backend = RecordingBackend(self._backend, self._store.wire_log_path(session_id))
        try:
            session = start_session(
                image,
                label_map,
                backend,
                segmentation_provider=self._segmentation,
                config=self._config,
                session_id=session_id,
            )
            self._store.save(session)
        except Exception:
            self._store.discard(session_id)
            raise
        with self._registry_lock:
            self._sessions[session_id] = _Managed(session=session)
        return session

    # --- mutations ----------------------------------------------------------

    def prompt(self, session_id: str, text: str) -> PromptOutcome:
        managed = self._get(session_id)
        with managed.counter_lock:
            if managed.waiting >= self._config.prompt_queue_depth:
                raise PromptQueueFull(
                    f"session {session_id} already has {managed.waiting} queued prompts"
                )
            managed.waiting += 1
        try:
            with managed.lock:
                outcome = managed.session.handle_prompt(text)
                self._store.save(managed.session)
                return outcome
        finally:
            with managed.counter_lock:
                managed.waiting -= 1

    def undo(self, session_id: str) -> EditSession:
        managed = self._get(session_id)
        with managed.lock:
            managed.session.undo()
            self._store.save(managed.session)
            return managed.session

    def redo(self, session_id: str) -> EditSession:
        managed = self._get(session_id)
        with managed.lock:
            managed.session.redo()
            self._store.save(managed.session)
            return managed.session

    # --- reads ----------------------------------------------------------------

    def image_bytes(self, session_id: str, version: str) -> bytes:
        managed = self._get(session_id)
        session = managed.session
        path = self._store.session_dir(session_id)
        if version == "original":
            return (path / "original.png").read_bytes()
        if version == "som-current":
            return image_to_png_bytes(session.som_overlay_current())
        if version == "current":
            if session.cursor == 0:
                return (path / "original.png").read_bytes()
            version = str(session.cursor)
        if version.isdigit():
            seq = int(version)
            if 1 <= seq <= len(session.history):
                return (path / f"edit-{seq:04d}.png").read_bytes()
        raise UnknownImageVersion(f"no image version {version!r}")

    def image_version_ids(self, session_id: str) -> list[str]:
        session = self._get(session_id).session
        return (
            ["original"]
            + [str(r.seq) for r in session.history]
            + ["current", "som-current"]
        )
