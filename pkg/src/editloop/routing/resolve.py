"""Grounding object references against the registry.

Name matching is deliberately literal: lowercase alphanumeric tokens,
stop words removed, no stemming. A reference grounds only when strictly
more than half of its informative tokens appear in exactly one best
description; near-misses surface as errors with the closest candidates
attached instead of silently picking something. Possessive modifiers in
the reference are dropped ("the cat's bow tie" grounds the bow tie, not
the cat), which is also what disambiguates descriptions that merely
mention the possessor.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from editloop.errors import (
    AmbiguousReference,
    BackendUnavailable,
    NoMatchingObject,
    ObjectNotLive,
    UnknownObjectIndex,
)
from editloop.routing.types import ObjectRef

if TYPE_CHECKING:
    from editloop.registry import ObjectRegistry

STOP_WORDS = {
    "the", "a", "an", "of", "in", "on", "at", "to", "from", "with", "and",
    "or", "this", "that", "these", "those", "it", "its", "is", "are",
    "was", "were", "s", "image", "picture", "photo", "scene", "frame",
}

_POSSESSIVE = re.compile(r"\b[a-z0-9]+'s\s+", re.IGNORECASE)


def _reference_tokens(name: str) -> list[str]:
    cleaned = _POSSESSIVE.sub("", name)
    return [t for t in re.findall(r"[a-z0-9]+", cleaned.lower()) if t not in STOP_WORDS]


def _description_tokens(description: str) -> set[str]:
    cleaned = description.replace("'s", " ")
    return {t for t in re.findall(r"[a-z0-9]+", cleaned.lower()) if t not in STOP_WORDS}


def score_reference(name: str, description: str) -> tuple[float, float]:
    """(fraction of reference tokens matched, fraction of description matched)."""
    ref = _reference_tokens(name)
    desc = _description_tokens(description)
    if not ref or not desc:
        return 0.0, 0.0
    hit = sum(1 for t in ref if t in desc)
    return hit / len(ref), len(set(ref) & desc) / len(desc)


def resolve_object_reference(
    ref: ObjectRef,
    registry: "ObjectRegistry",
    backend=None,
    som_image=None,
) -> int:
    """Ground a reference to a live object index, or raise.

    The backend tier (when given) asks the model to pick the index from
    the overlay image; any backend failure falls back to token scoring.
    """
    if ref.kind == "none":
        raise ValueError("nothing to resolve for an objectless reference")

    if ref.kind == "index":
        assert ref.index is not None
        entry = registry.find(ref.index)
        if entry is None:
            raise UnknownObjectIndex(f"no object with index {ref.index}")
        if not entry.is_live:
            raise ObjectNotLive(f"object {ref.index} has been removed")
        return ref.index

    assert ref.name is not None
    if backend is not None and som_image is not None:
        try:
            return _resolve_via_backend(ref.name, registry, backend, som_image)
        except BackendUnavailable:
            pass

    live = [e for e in registry.entries if e.is_live]
    if not live:
        raise NoMatchingObject(f"no live objects to match {ref.name!r}", candidates=[])

    scored = sorted(
        ((score_reference(ref.name, e.description), e) for e in live),
        key=lambda pair: pair[0],
        reverse=True,
    )
    best_score, best_entry = scored[0]
    candidates = [
        (e.index, e.description) for (s, e) in scored if s[0] > 0.0
    ][:3]

    if best_score[0] <= 0.5:
        raise NoMatchingObject(
            f"no object matches {ref.name!r} well enough", candidates=candidates
        )
    tied = [e for (s, e) in scored if s == best_score]
    if len(tied) > 1:
        raise AmbiguousReference(
            f"{ref.name!r} matches several objects equally well",
            candidates=[(e.index, e.description) for e in tied],
        )
    return best_entry.index


def _resolve_via_backend(name: str, registry: "ObjectRegistry", backend, som_image) -> int:
    from editloop.backends.base import resolve_reference_request

    request = resolve_reference_request(
        som_image, name, "\n".join(registry.render_lines(live_only=True))
    )
    response = backend.respond(request)
    match = re.search(r"\d+", response)
    if not match:
        raise BackendUnavailable("backend reference resolution returned no index")
    index = int(match.group(0))
    entry = registry.find(index)
    if entry is None:
        raise UnknownObjectIndex(f"backend chose unknown object index {index}")
    if not entry.is_live:
        raise ObjectNotLive(f"backend chose removed object {index}")
    return index
