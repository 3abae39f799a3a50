"""One editing loop's full state.

A session owns the image history (full snapshots, so undo is bit-exact),
the object registry, and the chat log. History is linear: editing while
undone discards the redo tail, after which sequence numbers restart from
the cursor so they stay contiguous within the live history. Chat is
append-only — undone or superseded feedback stays readable and notices
mark what happened, because text that silently vanishes strands a
screen-reader user mid-context.

Questions are chat-only: they never create history records and are not
undoable. Errors on any path leave image, registry, history, and cursor
untouched (a backend-down note may still land in chat, that is the
prescribed surface for it).
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from typing import Any

from editloop.config import EngineConfig
from editloop.errors import (
    BackendRefused,
    BackendUnavailable,
    DimensionMismatch,
    EditLimitReached,
    MissingParameter,
    NothingToRedo,
    NothingToUndo,
    ObjectNotLive,
    SegmentationUnavailable,
)
from editloop.backends import base as backend_ops
from editloop.backends.base import VisionBackend
from editloop.feedback import VerificationBundle, generate_verification, unavailable_marker, GENERAL_TITLE
from editloop.imaging.buffer import ImageBuffer, LabelMap
from editloop.imaging.som import render_som_overlay
from editloop.ops.actions import ActionKind, Anchor
from editloop.ops.blur import blur_object
from editloop.ops.brightness import adjust_brightness
from editloop.ops.inpaint import BaselineInpaint, InpaintStrategy, RemoteInpaint
from editloop.ops.recolor import change_color
from editloop.ops.remove import remove_object
from editloop.ops.text import TextPlacement, add_text
from editloop.registry import ObjectRegistry
from editloop.routing.router import route_prompt
from editloop.routing.types import EditIntent


@dataclass(frozen=True)
class ChatEntry:
    heading_level: int | None   # 1, 2, or None for body text
    author: str                 # "user" | "system"
    text: str
    linked_edit_seq: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "heading_level": self.heading_level,
            "author": self.author,
            "text": self.text,
            "linked_edit_seq": self.linked_edit_seq,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ChatEntry":
        return cls(
            heading_level=data["heading_level"],
            author=data["author"],
            text=data["text"],
            linked_edit_seq=data.get("linked_edit_seq"),
        )


def format_chat_entries(seq: int, bundle: VerificationBundle) -> list[ChatEntry]:
    """Heading-leveled chat block for one edit's verification output.

    One level-1 entry opens the block; the four feedback sections follow
    in fixed order, each a level-2 title plus body entries (the object
    list renders one body line per index).
    """
    entries = [
        ChatEntry(1, "system", f"Verification Output of Edit #{seq} starts from here", seq),
        ChatEntry(2, "system", f"[#{seq}] Summary of Visual Changes", seq),
        ChatEntry(None, "system", bundle.summary, seq),
        ChatEntry(2, "system", f"[#{seq}] AI Judgement", seq),
        ChatEntry(None, "system", bundle.judgement, seq),
        ChatEntry(2, "system", f"[#{seq}] Updated General Description", seq),
        ChatEntry(None, "system", bundle.general, seq),
        ChatEntry(2, "system", f"[#{seq}] Updated Object Descriptions", seq),
    ]
    lines = bundle.object_lines()
    if lines:
        entries.extend(ChatEntry(None, "system", line, seq) for line in lines)
    else:
        entries.append(ChatEntry(None, "system", "(no objects)", seq))
    return entries


@dataclass(frozen=True)
class EditRecord:
    seq: int
    prompt: str
    intent: EditIntent
    tier: str
    image_before: ImageBuffer
    image_after: ImageBuffer
    registry_before: ObjectRegistry
    registry_after: ObjectRegistry
    general_before: str
    general_after: str
    verification: VerificationBundle
    objects_refreshed: bool
    text_placement: TextPlacement | None = None


@dataclass
class PromptOutcome:
    kind: str                    # "question" | "edit"
    tier: str
    answer: str | None = None
    record: EditRecord | None = None
    chat_added: list[ChatEntry] = field(default_factory=list)


def make_inpaint_strategy(config: EngineConfig) -> InpaintStrategy:
    if config.inpaint.strategy == "remote":
        if not config.inpaint.endpoint:
            raise ValueError("remote inpaint strategy requires an endpoint")
        return RemoteInpaint(config.inpaint.endpoint)
    return BaselineInpaint()


class EditSession:
    def __init__(
        self,
        session_id: str,
        config: EngineConfig,
        backend: VisionBackend,
        original: ImageBuffer,
        registry: ObjectRegistry,
        initial_general: str,
        inpaint_strategy: InpaintStrategy | None = None,
    ):
        self.session_id = session_id
        self.config = config
        self.backend = backend
        self.original = original
        self.initial_registry = registry
        self.initial_general = initial_general
        self.snapshots: list[ImageBuffer] = [original]
        self.history: list[EditRecord] = []
        self.cursor = 0
        self.chat: list[ChatEntry] = []
        self.events: list[dict] = []
        self._inpaint = inpaint_strategy or make_inpaint_strategy(config)

        self.chat.append(
            ChatEntry(None, "system", f"Initial General Description: {initial_general}")
        )
        lines = registry.render_lines()
        body = "\n".join(lines) if lines else "(no objects detected)"
        self.chat.append(ChatEntry(None, "system", f"Initial Object Descriptions:\n{body}"))

    # --- state accessors ---------------------------------------------------

    @property
    def current_image(self) -> ImageBuffer:
        return self.snapshots[self.cursor]

    @property
    def current_registry(self) -> ObjectRegistry:
        if self.cursor == 0:
            return self.initial_registry
        return self.history[self.cursor - 1].registry_after

    @property
    def current_general(self) -> str:
        if self.cursor == 0:
            return self.initial_general
        return self.history[self.cursor - 1].general_after

    def snapshot_digests(self) -> list[str]:
        return [s.digest() for s in self.snapshots]

    def som_overlay_current(self) -> ImageBuffer:
        return render_som_overlay(self.current_image, self.current_registry.live_label_map())

    # --- prompt handling ---------------------------------------------------

    def handle_prompt(self, text: str) -> PromptOutcome:
        """Route and execute one prompt: answer it or apply the edit."""
        backend = self.backend if self.config.routing == "backend" else None
        som = self.som_overlay_current() if backend is not None else None
        routed = route_prompt(
            text,
            self.current_registry,
            backend=backend,
            routing=self.config.routing,
            som_image=som,
        )
        if routed.kind == "question":
            return self._answer_question(text, routed.tier)
        assert routed.intent is not None
        return self._apply_prompt_edit(routed.intent, text, routed.tier)

    def _answer_question(self, text: str, tier: str) -> PromptOutcome:
        try:
            answer = backend_ops.answer_question(self.backend, self.current_image, text)
        except (BackendUnavailable, BackendRefused) as exc:
            note = ChatEntry(None, "system", f"[Answer unavailable: {exc.message}]")
            self.chat.append(ChatEntry(None, "user", text))
            self.chat.append(note)
            raise
        added = [ChatEntry(None, "user", text), ChatEntry(None, "system", answer)]
        self.chat.extend(added)
        self.events.append({"type": "question", "prompt": text, "answer": answer, "tier": tier})
        return PromptOutcome(kind="question", tier=tier, answer=answer, chat_added=added)

    def _apply_prompt_edit(self, intent: EditIntent, prompt: str, tier: str) -> PromptOutcome:
        chat_mark = len(self.chat)
        record = self.apply_edit(intent, prompt, tier)
        added = list(self.chat[chat_mark:])
        return PromptOutcome(kind="edit", tier=tier, record=record, chat_added=added)

    # --- editing -----------------------------------------------------------

    def _run_action(
        self, intent: EditIntent, before: ImageBuffer, registry: ObjectRegistry
    ) -> tuple[ImageBuffer, TextPlacement | None]:
        action = intent.action
        mask = (
            registry.mask(intent.resolved_index)
            if intent.resolved_index is not None
            else None
        )

        if action.kind == ActionKind.ADD_TEXT:
            if mask is not None:
                return add_text(
                    before, action.text, mask=mask,
                    size_frac=self.config.text.size_frac,
                    min_size_frac=self.config.text.min_size_frac,
                    margin_frac=self.config.text.margin_frac,
                    outline_px=self.config.text.outline_px,
                )
            anchor = action.anchor or Anchor("center", "center")
            return add_text(
                before, action.text, anchor=anchor,
                size_frac=self.config.text.size_frac,
                min_size_frac=self.config.text.min_size_frac,
                margin_frac=self.config.text.margin_frac,
                outline_px=self.config.text.outline_px,
            )

        if mask is None:
            raise MissingParameter(f"{action.kind.value} requires an object")
        if action.kind == ActionKind.BLUR:
            return (
                blur_object(
                    before, mask, self.config.blur_sigma_min, self.config.blur_sigma_divisor
                ),
                None,
            )
        if action.kind == ActionKind.REMOVE:
            return (
                remove_object(
                    before, mask, strategy=self._inpaint,
                    dilation_radius=self.config.inpaint.dilation_radius,
                ),
                None,
            )
        if action.kind == ActionKind.CHANGE_COLOR:
            return change_color(before, mask, action.target_color), None
        if action.kind == ActionKind.ADJUST_BRIGHTNESS:
            return (
                adjust_brightness(before, mask, action.direction, self.config.brightness_step),
                None,
            )
        raise ValueError(f"unhandled action kind: {action.kind}")

    def apply_edit(self, intent: EditIntent, prompt: str, tier: str = "rules") -> EditRecord:
        registry = self.current_registry
        if intent.resolved_index is not None and not registry.is_live(intent.resolved_index):
            raise ObjectNotLive(f"object {intent.resolved_index} is not live")
        if intent.resolved_index is None and intent.action.kind != ActionKind.ADD_TEXT:
            raise MissingParameter(f"{intent.action.kind.value} requires a resolved object")
        if self.cursor >= self.config.max_edits:
            raise EditLimitReached(f"session edit limit ({self.config.max_edits}) reached")

        before = self.current_image
        general_before = self.current_general
        after, placement = self._run_action(intent, before, registry)

        # Only after the deterministic part succeeded do we touch state.
        if self.cursor < len(self.history):
            discarded_from = self.cursor + 1
            discarded_to = len(self.history)
            del self.history[self.cursor:]
            del self.snapshots[self.cursor + 1:]
            span = (
                f"#{discarded_from}" if discarded_from == discarded_to
                else f"#{discarded_from}-#{discarded_to}"
            )
            self.chat.append(
                ChatEntry(None, "system", f"[Edits {span} were discarded by a new edit]")
            )

        registry_mid = registry
        if intent.action.kind == ActionKind.REMOVE:
            registry_mid = registry.mark_removed(intent.resolved_index)

        carried = tuple(
            (e.index, e.description if e.is_live else None) for e in registry.entries
        )
        bundle, objects_refreshed = generate_verification(
            self.backend,
            before,
            after,
            registry_mid,
            general_before,
            "\n".join(registry.render_lines()) or "(no objects)",
            prompt,
            object_targeted=intent.resolved_index is not None,
            carried_objects=carried,
        )

        registry_after = registry_mid
        if objects_refreshed:
            registry_after = registry_mid.with_descriptions(
                {i: t for i, t in bundle.objects if t is not None}
            )
        general_after = bundle.general
        if general_after == unavailable_marker(GENERAL_TITLE):
            general_after = general_before

        seq = self.cursor + 1
        record = EditRecord(
            seq=seq,
            prompt=prompt,
            intent=intent,
            tier=tier,
            image_before=before,
            image_after=after,
            registry_before=registry,
            registry_after=registry_after,
            general_before=general_before,
            general_after=general_after,
            verification=bundle,
            objects_refreshed=objects_refreshed,
            text_placement=placement,
        )
        self.history.append(record)
        self.snapshots.append(after)
        self.cursor = seq
        self.chat.append(ChatEntry(None, "user", prompt, seq))
        self.chat.extend(format_chat_entries(seq, bundle))
        self.events.append(
            {
                "type": "edit",
                "seq": seq,
                "prompt": prompt,
                "tier": tier,
                "intent": intent.to_dict(),
                "before_digest": before.digest(),
                "after_digest": after.digest(),
                "verification": bundle.to_dict(),
                "objects_refreshed": objects_refreshed,
                "general_after": general_after,
            }
        )
        return record

    # --- undo / redo ---------------------------------------------------------

    def undo(self) -> None:
        if self.cursor == 0:
            raise NothingToUndo("no edits to undo")
        seq = self.cursor
        self.cursor -= 1
        self.chat.append(ChatEntry(None, "system", f"[Edit #{seq} undone]"))
        self.events.append({"type": "undo"})

    def redo(self) -> None:
        if self.cursor >= len(self.history):
            raise NothingToRedo("no undone edit to redo")
        self.cursor += 1
        self.chat.append(ChatEntry(None, "system", f"[Edit #{self.cursor} redone]"))
        self.events.append({"type": "redo"})


def start_session(
    image: ImageBuffer,
    label_map: LabelMap | None = None,
    backend: VisionBackend | None = None,
    segmentation_provider=None,
    config: EngineConfig | None = None,
    session_id: str | None = None,
) -> EditSession:
    """Create a session: segment (or accept a map), describe, seed the chat."""
    config = config or EngineConfig()
    if backend is None:
        raise BackendUnavailable("no vision-language backend configured")
    if label_map is None:
        if segmentation_provider is None:
            raise SegmentationUnavailable(
                "no label map supplied and no segmentation provider configured"
            )
        label_map = segmentation_provider(image)
    if (label_map.width, label_map.height) != (image.width, image.height):
        raise DimensionMismatch(
            f"label map is {label_map.width}x{label_map.height}, "
            f"image is {image.width}x{image.height}"
        )

    general = backend_ops.general_description(backend, image)
    indices = label_map.indices()
    descriptions: dict[int, str] = {}
    if indices:
        som = render_som_overlay(image, label_map)
        descriptions = dict(backend_ops.object_descriptions(backend, som, indices))
    registry = ObjectRegistry.from_label_map(label_map, descriptions)

    return EditSession(
        session_id=session_id or uuid.uuid4().hex[:12],
        config=config,
        backend=backend,
        original=image,
        registry=registry,
        initial_general=general,
    )
