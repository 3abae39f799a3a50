"""Deterministic transcript replay.

Re-runs every recorded event on a fresh session and verifies each edit's
after-image digest, each question's answer, the final image, the cursor,
and the entire chat byte-for-byte. With the scripted mock backend this
must reproduce a recorded run exactly on the same build.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from editloop.config import EngineConfig
from editloop.backends.base import VisionBackend
from editloop.imaging.buffer import ImageBuffer, LabelMap
from editloop.session import EditSession, start_session
from editloop.transcript import config_from_transcript


@dataclass
class ReplayCheck:
    label: str
    ok: bool
    expected: str
    actual: str


@dataclass
class ReplayReport:
    checks: list[ReplayCheck] = field(default_factory=list)
    chat_ok: bool = False
    final_ok: bool = False

    def add(self, label: str, expected: str, actual: str) -> None:
        self.checks.append(ReplayCheck(label, expected == actual, expected, actual))

    @property
    def passed(self) -> bool:
        return self.chat_ok and self.final_ok and all(c.ok for c in self.checks)

    def summary_lines(self) -> list[str]:
        lines = []
        for check in self.checks:
            status = "ok" if check.ok else "MISMATCH"
            lines.append(f"{check.label}: {status}")
            if not check.ok:
                lines.append(f"  expected {check.expected}")
                lines.append(f"  actual   {check.actual}")
        lines.append(f"chat: {'ok' if self.chat_ok else 'MISMATCH'}")
        lines.append(f"final image: {'ok' if self.final_ok else 'MISMATCH'}")
        return lines


def replay_transcript(
    transcript: dict[str, Any],
    image: ImageBuffer,
    label_map: LabelMap,
    backend: VisionBackend,
    config: EngineConfig | None = None,
) -> tuple[ReplayReport, EditSession]:
    report = ReplayReport()
    report.add("original image digest", transcript["image"]["digest"], image.digest())
    report.add("label map digest", transcript["label_map_digest"], label_map.digest())

    session = start_session(
        image,
        label_map,
        backend,
        config=config or config_from_transcript(transcript),
        session_id=transcript["session_id"],
    )
    report.add("initial general description", transcript["initial"]["general"], session.initial_general)

    for event in transcript["events"]:
        if event["type"] == "edit":
            outcome = session.handle_prompt(event["prompt"])
            assert outcome.record is not None
            report.add(
                f"edit #{event['seq']} image digest",
                event["after_digest"],
                outcome.record.image_after.digest(),
            )
        elif event["type"] == "question":
            outcome = session.handle_prompt(event["prompt"])
            report.add(
                f"question {event['prompt']!r}",
                event["answer"],
                outcome.answer or "",
            )
        elif event["type"] == "undo":
            session.undo()
        elif event["type"] == "redo":
            session.redo()
        else:
            raise ValueError(f"unknown transcript event type: {event['type']}")

    report.chat_ok = [e.to_dict() for e in session.chat] == transcript["chat"]
    report.final_ok = (
        session.current_image.digest() == transcript["final_digest"]
        and session.cursor == transcript["cursor"]
    )
    return report, session
