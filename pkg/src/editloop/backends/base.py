"""Backend request model and the typed operations built on it.

Each request kind has a fixed grounding contract — which images and which
texts it may carry — so feedback generation stays honest about what each
answer was grounded on:

- general_description / object_descriptions: exactly one image, no
  description texts (object_descriptions gets the index-overlay frame);
- summary_of_changes: exactly the before and after images, no description
  texts;
- judgement: both images plus the four description texts plus the edit
  instruction;
- answer_question: one image plus the question;
- classify / resolve_reference: routing helpers (text, and the overlay
  image for reference resolution).

Backends exchange plain text; this module owns parsing the structured
parts (per-object description lines) and enforcing coverage.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Protocol

from editloop.errors import MissingIndexInResponse
from editloop.imaging.buffer import ImageBuffer


class RequestKind(str, enum.Enum):
    GENERAL_DESCRIPTION = "general_description"
    OBJECT_DESCRIPTIONS = "object_descriptions"
    ANSWER_QUESTION = "answer_question"
    SUMMARY_OF_CHANGES = "summary_of_changes"
    JUDGEMENT = "judgement"
    CLASSIFY = "classify"
    RESOLVE_REFERENCE = "resolve_reference"


@dataclass(frozen=True)
class BackendRequest:
    kind: RequestKind
    images: tuple[ImageBuffer, ...] = ()
    instruction: str = ""
    descriptions: tuple[str, ...] = ()
    user_text: str | None = None


class VisionBackend(Protocol):
    """Anything that can answer a BackendRequest with text."""

    def respond(self, request: BackendRequest) -> str: ...


def load_templates() -> dict[str, str]:
    """Instruction templates, shipped as versioned package data."""
    raw = resources.files("editloop.backends").joinpath("templates.json").read_text("utf-8")
    data = json.loads(raw)
    return data["templates"]


_TEMPLATES = load_templates()


def general_description(backend: VisionBackend, image: ImageBuffer) -> str:
    """One-paragraph description grounded only on the given frame."""
    request = BackendRequest(
        kind=RequestKind.GENERAL_DESCRIPTION,
        images=(image,),
        instruction=_TEMPLATES["general_description"],
    )
    return backend.respond(request).strip()


_OBJECT_LINE = re.compile(r"^\s*(?:object\s*)?#?(\d+)\s*[:.]\s*(.*\S)\s*$", re.IGNORECASE)


def parse_object_lines(text: str) -> dict[int, str]:
    """Extract ``Object <n>: <text>`` lines (tolerant about prefixes)."""
    found: dict[int, str] = {}
    for line in text.splitlines():
        match = _OBJECT_LINE.match(line)
        if match:
            found[int(match.group(1))] = match.group(2).strip().strip('"')
    return found


def object_descriptions(
    backend: VisionBackend, som_image: ImageBuffer, live_indices: Iterable[int]
) -> list[tuple[int, str]]:
    """One description per live index, from the index-overlay frame.

    Raises MissingIndexInResponse when the backend skips a live object.
    """
    live = sorted(int(i) for i in live_indices)
    instruction = _TEMPLATES["object_descriptions"].format(
        indices=", ".join(str(i) for i in live)
    )
    request = BackendRequest(
        kind=RequestKind.OBJECT_DESCRIPTIONS,
        images=(som_image,),
        instruction=instruction,
    )
    parsed = parse_object_lines(backend.respond(request))
    missing = [i for i in live if i not in parsed]
    if missing:
        raise MissingIndexInResponse(
            f"backend response lacks live object indices: {missing}"
        )
    return [(i, parsed[i]) for i in live]


def summary_of_changes(
    backend: VisionBackend, before: ImageBuffer, after: ImageBuffer
) -> str:
    """Visual diff paragraph grounded only on the two frames."""
    if (before.width, before.height) != (after.width, after.height):
        raise ValueError("before/after images must share dimensions")
    request = BackendRequest(
        kind=RequestKind.SUMMARY_OF_CHANGES,
        images=(before, after),
        instruction=_TEMPLATES["summary_of_changes"],
    )
    return backend.respond(request).strip()


def judgement(
    backend: VisionBackend,
    before: ImageBuffer,
    after: ImageBuffer,
    prev_general: str,
    prev_objects: str,
    new_general: str,
    new_objects: str,
    instruction: str,
) -> str:
    """Success verdict grounded on both frames, all four descriptions, and the instruction."""
    for name, value in (
        ("prev_general", prev_general),
        ("prev_objects", prev_objects),
        ("new_general", new_general),
        ("new_objects", new_objects),
        ("instruction", instruction),
    ):
        if not value or not value.strip():
            raise ValueError(f"judgement requires {name}")
    request = BackendRequest(
        kind=RequestKind.JUDGEMENT,
        images=(before, after),
        instruction=_TEMPLATES["judgement"],
        descriptions=(prev_general, prev_objects, new_general, new_objects),
        user_text=instruction,
    )
    return backend.respond(request).strip()


def answer_question(backend: VisionBackend, image: ImageBuffer, question: str) -> str:
    request = BackendRequest(
        kind=RequestKind.ANSWER_QUESTION,
        images=(image,),
        instruction=_TEMPLATES["answer_question"],
        user_text=question,
    )
    return backend.respond(request).strip()


def classify_request(prompt: str) -> BackendRequest:
    return BackendRequest(
        kind=RequestKind.CLASSIFY,
        instruction=_TEMPLATES["classify"],
        user_text=prompt,
    )


def resolve_reference_request(
    som_image: ImageBuffer, reference: str, object_lines: str
) -> BackendRequest:
    return BackendRequest(
        kind=RequestKind.RESOLVE_REFERENCE,
        images=(som_image,),
        instruction=_TEMPLATES["resolve_reference"].format(objects=object_lines),
        user_text=reference,
    )


# Cardinality contract per kind: (image count, description count or None
# for "don't care", user_text required).
GROUNDING_RULES: dict[RequestKind, tuple[int, int, bool]] = {
    RequestKind.GENERAL_DESCRIPTION: (1, 0, False),
    RequestKind.OBJECT_DESCRIPTIONS: (1, 0, False),
    RequestKind.SUMMARY_OF_CHANGES: (2, 0, False),
    RequestKind.JUDGEMENT: (2, 4, True),
    RequestKind.ANSWER_QUESTION: (1, 0, True),
    RequestKind.CLASSIFY: (0, 0, True),
    RequestKind.RESOLVE_REFERENCE: (1, 0, True),
}


def check_grounding(request: BackendRequest) -> str | None:
    """None when the request obeys its contract, else a violation message."""
    images, descriptions, needs_user_text = GROUNDING_RULES[request.kind]
    if len(request.images) != images:
        return (
            f"{request.kind.value}: expected {images} image(s), got {len(request.images)}"
        )
    if len(request.descriptions) != descriptions:
        return (
            f"{request.kind.value}: expected {descriptions} description text(s), "
            f"got {len(request.descriptions)}"
        )
    if needs_user_text and not (request.user_text and request.user_text.strip()):
        return f"{request.kind.value}: missing user text"
    if not request.instruction.strip():
        return f"{request.kind.value}: missing instruction"
    return None
