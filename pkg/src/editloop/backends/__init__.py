"""Vision-language backends: abstract interface, scripted mock, remote client."""

from editloop.backends.base import (
    BackendRequest,
    RequestKind,
    VisionBackend,
    answer_question,
    general_description,
    judgement,
    object_descriptions,
    summary_of_changes,
)
from editloop.backends.mock import ScriptedMock
from editloop.backends.recording import RecordingBackend
from editloop.backends.remote import RemoteBackend

__all__ = [
    "RequestKind",
    "BackendRequest",
    "VisionBackend",
    "general_description",
    "object_descriptions",
    "summary_of_changes",
    "judgement",
    "answer_question",
    "ScriptedMock",
    "RecordingBackend",
    "RemoteBackend",
]
