"""Two-tier prompt routing: backend first, deterministic rules as fallback.

The tier that actually decided is recorded on the result so transcripts
show which path a prompt took. No prompt ever reaches an edit without a
fully resolved intent; every failure raises before any state changes.
"""

from __future__ import annotations

import logging
import re
from typing import TYPE_CHECKING

from editloop.errors import BackendUnavailable, EmptyPrompt
from editloop.backends.base import classify_request
from editloop.routing.resolve import resolve_object_reference
from editloop.routing.rules import classify_prompt, parse_edit_intent
from editloop.routing.types import RoutedPrompt

if TYPE_CHECKING:
    from editloop.registry import ObjectRegistry

logger = logging.getLogger(__name__)


def _classify_via_backend(text: str, backend) -> str:
    response = backend.respond(classify_request(text)).strip().lower()
    if re.search(r"\bedit\b", response):
        return "edit"
    if re.search(r"\bquestion\b", response):
        return "question"
    raise BackendUnavailable(f"unusable classification response: {response!r}")


def route_prompt(
    text: str,
    registry: "ObjectRegistry",
    backend=None,
    routing: str = "rules",
    som_image=None,
    lexicon: dict[str, str] | None = None,
) -> RoutedPrompt:
    """Classify a prompt and, for edits, produce a fully resolved intent."""
    if not text or not text.strip():
        raise EmptyPrompt("prompt is empty")

    tier = "rules"
    kind: str | None = None
    if routing == "backend" and backend is not None:
        try:
            kind = _classify_via_backend(text, backend)
            tier = "backend"
        except BackendUnavailable as exc:
            logger.info("backend classification unavailable, using rules: %s", exc)
    if kind is None:
        kind = classify_prompt(text, lexicon)

    if kind == "question":
        return RoutedPrompt(kind="question", raw_text=text, tier=tier)

    intent = parse_edit_intent(text, lexicon)
    if intent.object_ref.kind != "none":
        resolver_backend = backend if tier == "backend" else None
        index = resolve_object_reference(
            intent.object_ref, registry, backend=resolver_backend, som_image=som_image
        )
        intent = intent.with_resolution(index)
    return RoutedPrompt(kind="edit", raw_text=text, intent=intent, tier=tier)
