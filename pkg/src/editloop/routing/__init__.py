"""Prompt routing: classify, parse, and ground natural-language prompts."""

from editloop.routing.types import EditIntent, ObjectRef, RoutedPrompt
from editloop.routing.rules import classify_prompt, parse_edit_intent
from editloop.routing.resolve import resolve_object_reference, score_reference
from editloop.routing.router import route_prompt

__all__ = [
    "ObjectRef",
    "EditIntent",
    "RoutedPrompt",
    "classify_prompt",
    "parse_edit_intent",
    "resolve_object_reference",
    "score_reference",
    "route_prompt",
]
