"""Deterministic rule-based prompt classification and intent parsing.

This is the fallback tier that keeps the whole loop testable without a
live model. Classification is conservative: interrogative openers and a
trailing question mark win over everything, an action-verb hit makes an
edit, and anything else is treated as a question because answering never
mutates the image.

Parsing maps one prompt to exactly one action. Prompts that name two
different actions are rejected (one action per prompt), and a missing
required parameter (a color for recoloring, a payload for text) is an
error rather than a guess. The verb lexicon is data so deployments can
extend it without code changes.
"""

from __future__ import annotations

import re

from editloop.errors import EmptyPrompt, MissingParameter, UnrecognizedAction
from editloop.ops.actions import (
    COLOR_NAMES,
    ActionKind,
    Anchor,
    BrightnessDirection,
    EditAction,
)
from editloop.routing.types import EditIntent, ObjectRef

INTERROGATIVE_LEADS = {
    "is", "are", "does", "do", "can", "could", "what", "where", "how",
    "which", "who", "whom", "whose", "why", "when", "will", "would",
    "should", "shall", "tell", "describe", "explain",
}

# keyword -> action family; extend via the lexicon argument.
DEFAULT_ACTION_LEXICON: dict[str, str] = {
    "blur": "blur", "blurry": "blur", "blurred": "blur", "vague": "blur",
    "fuzzy": "blur", "obscure": "blur", "soften": "blur", "pixelate": "blur",
    "remove": "remove", "delete": "remove", "erase": "remove",
    "hide": "remove", "eliminate": "remove",
    "color": "change_color", "colour": "change_color",
    "recolor": "change_color", "recolour": "change_color", "repaint": "change_color",
    "brightness": "adjust_brightness", "brighten": "adjust_brightness",
    "brighter": "adjust_brightness", "darken": "adjust_brightness",
    "darker": "adjust_brightness", "dim": "adjust_brightness",
    "dimmer": "adjust_brightness", "lighten": "adjust_brightness",
    "lighter": "adjust_brightness",
}

# Verbs that signal an edit for classification but carry no action family
# by themselves ("make", "change", ...). Their meaning comes from context.
HELPER_EDIT_VERBS = {
    "make", "change", "turn", "set", "apply", "increase", "decrease",
    "raise", "lower", "reduce", "boost", "adjust", "paint", "add",
    "place", "put", "write", "generate", "insert", "modify", "edit",
}

TEXT_VERBS = {"add", "place", "put", "write", "generate", "insert"}
TEXT_MARKERS = {"text", "word", "words", "sentence", "caption", "label", "title"}
DARKER_CUES = {"darker", "darken", "dim", "dimmer", "decrease", "lower", "reduce", "dimmed"}
COLOR_TRIGGER_VERBS = {"change", "make", "turn", "paint", "set", "recolor", "repaint"}

# image-word tails that name the frame, not an object
_FRAME_TAIL = re.compile(
    r"\s+(?:in|within|on|of|from)\s+(?:the\s+|this\s+|that\s+)?(?:image|picture|photo|scene|frame)\b.*$",
    re.IGNORECASE,
)
_INDEX_REF = re.compile(r"(?:#|\bobject\s*#?|\bnumber\s*|\bno\.\s*)(\d+)\b", re.IGNORECASE)
_QUOTED = re.compile(r"[\"'‘’“”](.+?)[\"'‘’“”]")
_ARTICLE = re.compile(r"^(?:the|a|an|this|that|my|our)\s+", re.IGNORECASE)

# Anchor phrases, longest first so "top right" beats "top" and "right".
_ANCHOR_PHRASES: list[tuple[str, tuple[str, str]]] = [
    ("top left corner", ("left", "top")), ("top right corner", ("right", "top")),
    ("bottom left corner", ("left", "bottom")), ("bottom right corner", ("right", "bottom")),
    ("upper left", ("left", "top")), ("upper right", ("right", "top")),
    ("lower left", ("left", "bottom")), ("lower right", ("right", "bottom")),
    ("top left", ("left", "top")), ("top right", ("right", "top")),
    ("bottom left", ("left", "bottom")), ("bottom right", ("right", "bottom")),
    ("center left", ("left", "center")), ("center right", ("right", "center")),
    ("centre left", ("left", "center")), ("centre right", ("right", "center")),
    ("middle left", ("left", "center")), ("middle right", ("right", "center")),
    ("left center", ("left", "center")), ("right center", ("right", "center")),
    ("top center", ("center", "top")), ("bottom center", ("center", "bottom")),
    ("center top", ("center", "top")), ("center bottom", ("center", "bottom")),
    ("top middle", ("center", "top")), ("bottom middle", ("center", "bottom")),
    ("upper third", ("center", "top")), ("lower third", ("center", "bottom")),
    ("top third", ("center", "top")), ("bottom third", ("center", "bottom")),
    ("top", ("center", "top")), ("bottom", ("center", "bottom")),
    ("left", ("left", "center")), ("right", ("right", "center")),
    ("center", ("center", "center")), ("centre", ("center", "center")),
    ("middle", ("center", "center")),
]


def _tokens(text: str) -> list[str]:
    return re.findall(r"[a-z]+", text.lower())


def classify_prompt(text: str, lexicon: dict[str, str] | None = None) -> str:
    """'question' or 'edit' by deterministic rules."""
    if not text or not text.strip():
        raise EmptyPrompt("prompt is empty")
    stripped = text.strip()
    if stripped.rstrip(".!").endswith("?"):
        return "question"
    toks = _tokens(stripped)
    if toks and toks[0] in INTERROGATIVE_LEADS:
        return "question"
    lex = lexicon or DEFAULT_ACTION_LEXICON
    for tok in toks:
        if tok in lex or tok in HELPER_EDIT_VERBS:
            return "edit"
    return "question"


def _extract_payload(raw: str) -> tuple[str | None, str]:
    """First quoted span (case preserved) and the prompt with it removed."""
    match = _QUOTED.search(raw)
    if match:
        return match.group(1), raw[: match.start()] + " " + raw[match.end() :]
    return None, raw


def _find_anchor(low: str) -> tuple[Anchor | None, str]:
    """Anchor named in the text, and the text with the location phrase removed."""
    for phrase, (horizontal, vertical) in _ANCHOR_PHRASES:
        pattern = re.compile(
            r"\b" + r"[\s-]+".join(re.escape(w) for w in phrase.split()) + r"\b"
        )
        match = pattern.search(low)
        if match:
            cleaned = low[: match.start()] + " " + low[match.end() :]
            return Anchor(horizontal, vertical), cleaned
    return None, low


def _find_color(low: str) -> str | None:
    """Target color name: prefer the one after to/into, else the last one."""
    words = re.findall(r"[a-z]+", low)
    candidates: list[tuple[int, str]] = []  # (position, canonical name)
    for i, w in enumerate(words):
        two = f"{w}{words[i + 1]}" if i + 1 < len(words) else None
        if two and two in COLOR_NAMES:
            candidates.append((i, f"{w} {words[i + 1]}"))
        elif w in COLOR_NAMES:
            # skip the first word of an already-matched two-word name
            if candidates and candidates[-1][0] == i - 1 and " " in candidates[-1][1]:
                continue
            candidates.append((i, w))
    if not candidates:
        return None
    for i, name in reversed(candidates):
        if i > 0 and words[i - 1] in ("to", "into"):
            return name
    return candidates[-1][1]


def _strip_frame_tail(span: str) -> str:
    while True:
        new = _FRAME_TAIL.sub("", span)
        if new == span:
            return new.strip()
        span = new


def _clean_object_span(span: str) -> str:
    span = _strip_frame_tail(span.strip().strip(".!,"))
    span = _ARTICLE.sub("", span)
    return span.strip().strip(".!,")


def _object_ref_from_span(span: str) -> ObjectRef:
    span = _clean_object_span(span)
    index = _INDEX_REF.search(span)
    if index:
        return ObjectRef.by_index(int(index.group(1)))
    if not span:
        raise MissingParameter("could not find the object to edit in the prompt")
    return ObjectRef.by_name(span)


def _detect_families(low: str, payload: str | None, lexicon: dict[str, str]) -> set[str]:
    toks = set(_tokens(low))
    families = {lexicon[t] for t in toks if t in lexicon}
    if toks & TEXT_VERBS and (payload is not None or toks & TEXT_MARKERS):
        families.add("add_text")
    color_name = _find_color(low)
    if color_name and toks & COLOR_TRIGGER_VERBS:
        families.add("change_color")
    if "change_color" in families and color_name is None and len(families) > 1:
        # "color" mentioned alongside a real action but no target color:
        # treat the other action as the intent.
        families.discard("change_color")
    return families


def _parse_blur(low: str) -> ObjectRef:
    index = _INDEX_REF.search(low)
    if index:
        return ObjectRef.by_index(int(index.group(1)))
    match = re.search(
        r"\b(?:blur|obscure|soften|pixelate)(?:\s+out)?\s+(.+)$", low
    )
    if match:
        return _object_ref_from_span(match.group(1))
    match = re.search(
        r"\b(?:make|turn)\s+(.+?)\s+(?:look\s+)?(?:blurry|blurred|vague|fuzzy)\b", low
    )
    if match:
        return _object_ref_from_span(match.group(1))
    raise MissingParameter("could not find the object to blur")


def _parse_remove(low: str) -> ObjectRef:
    index = _INDEX_REF.search(low)
    if index:
        return ObjectRef.by_index(int(index.group(1)))
    match = re.search(r"\b(?:remove|delete|erase|hide|eliminate)\s+(.+)$", low)
    if match:
        return _object_ref_from_span(match.group(1))
    raise MissingParameter("could not find the object to remove")


def _parse_brightness(low: str) -> tuple[ObjectRef, BrightnessDirection]:
    direction = (
        BrightnessDirection.DARKER
        if set(_tokens(low)) & DARKER_CUES
        else BrightnessDirection.BRIGHTER
    )
    index = _INDEX_REF.search(low)
    if index:
        return ObjectRef.by_index(int(index.group(1))), direction
    match = re.search(r"\bbrightness\s+of\s+(.+)$", low)
    if match:
        return _object_ref_from_span(match.group(1)), direction
    match = re.search(
        r"\b(?:make|turn)\s+(.+?)\s+(?:brighter|darker|lighter|dimmer)\b", low
    )
    if match:
        return _object_ref_from_span(match.group(1)), direction
    match = re.search(r"\b(?:brighten|darken|dim|lighten)\s+(?:up\s+)?(.+)$", low)
    if match:
        return _object_ref_from_span(match.group(1)), direction
    raise MissingParameter("could not find the object whose brightness changes")


def _parse_change_color(low: str) -> tuple[ObjectRef, str]:
    color = _find_color(low)
    if color is None:
        raise MissingParameter("recoloring needs a target color word")
    color_pattern = r"[\s-]+".join(re.escape(w) for w in color.split())

    match = re.search(
        r"\b(?:color|colour)\s+of\s+(.+?)(?:\s+from\s+[a-z]+)?\s+(?:to|into)\b", low
    )
    if match:
        return _object_ref_from_span(match.group(1)), color
    match = re.search(
        r"\b(?:change|turn|paint|set|recolor|recolour|repaint)\s+(.+?)"
        r"(?:\s+(?:color|colour))?(?:\s+from\s+[a-z]+)?\s+(?:to|into)\s+(?:the\s+)?"
        + color_pattern + r"\b",
        low,
    )
    if match:
        return _object_ref_from_span(match.group(1)), color
    match = re.search(
        r"\b(?:make|paint|turn)\s+(.+?)\s+(?:the\s+)?" + color_pattern + r"\b", low
    )
    if match:
        return _object_ref_from_span(match.group(1)), color
    index = _INDEX_REF.search(low)
    if index:
        return ObjectRef.by_index(int(index.group(1))), color
    raise MissingParameter("could not find the object to recolor")


def _parse_add_text(raw: str, payload: str | None, remainder: str) -> tuple[str, Anchor | None, ObjectRef]:
    low = remainder.lower()
    if payload is None:
        match = re.search(
            r"\b(?:text|words?|sentence|caption|label|title)\s+(.+)$",
            raw,
            re.IGNORECASE,
        )
        if match:
            tail = match.group(1).strip().strip(".!")
            # Chop a trailing location phrase off an unquoted payload.
            tail = re.sub(
                r"\s+(?:to|in|at|on|near)\s+(?:the\s+)?"
                r"(?:top|bottom|upper|lower|center|centre|middle|left|right)[\w\s-]*$",
                "",
                tail,
                flags=re.IGNORECASE,
            )
            tail = re.sub(
                r"\s+(?:on|onto|over)\s+(?:the\s+)?object\s*#?\d+\s*$",
                "",
                tail,
                flags=re.IGNORECASE,
            )
            payload = tail.strip()
    if not payload or not payload.strip():
        raise MissingParameter("text placement needs the text payload")

    anchor, low = _find_anchor(low)
    obj_match = re.search(r"\b(?:onto|on|over)\s+(?:the\s+)?object\s*#?(\d+)\b", low)
    if obj_match is None:
        obj_match = re.search(r"#(\d+)\b", low)
    if anchor is None and obj_match is not None:
        return payload, None, ObjectRef.by_index(int(obj_match.group(1)))
    if anchor is None:
        named = re.search(r"\b(?:onto|over)\s+(?:the\s+)?(.+)$", low)
        if named:
            return payload, None, _object_ref_from_span(named.group(1))
        # No location at all: default to the image center.
        anchor = Anchor("center", "center")
    return payload, anchor, ObjectRef.none()


def parse_edit_intent(
    text: str, lexicon: dict[str, str] | None = None
) -> EditIntent:
    """Parse one edit instruction into an unresolved intent.

    Raises UnrecognizedAction for verbs outside the five actions (or for
    prompts naming several actions), MissingParameter when a required
    parameter is absent, and UnknownColorName for colors outside the table.
    """
    if not text or not text.strip():
        raise EmptyPrompt("prompt is empty")
    lex = lexicon or DEFAULT_ACTION_LEXICON

    payload, remainder = _extract_payload(text)
    low = remainder.lower()
    families = _detect_families(low, payload, lex)

    if not families:
        raise UnrecognizedAction(
            "the prompt does not map to a supported action "
            "(blur, remove, change color, adjust brightness, add text)"
        )
    if len(families) > 1:
        raise UnrecognizedAction(
            f"the prompt seems to combine several actions ({', '.join(sorted(families))}); "
            "please give one edit per prompt"
        )

    family = families.pop()
    if family == "blur":
        return EditIntent(EditAction.blur(), _parse_blur(low))
    if family == "remove":
        return EditIntent(EditAction.remove(), _parse_remove(low))
    if family == "adjust_brightness":
        ref, direction = _parse_brightness(low)
        return EditIntent(EditAction.adjust_brightness(direction), ref)
    if family == "change_color":
        ref, color = _parse_change_color(low)
        return EditIntent(EditAction.change_color(color), ref)
    payload_text, anchor, ref = _parse_add_text(text, payload, remainder)
    return EditIntent(EditAction.add_text(payload_text, anchor), ref)
