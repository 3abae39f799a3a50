"""Pydantic request/response bodies for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel

from editloop.session import ChatEntry, EditSession


class ObjectInfo(BaseModel):
    index: int
    description: str
    status: str


class StateSummary(BaseModel):
    session_id: str
    cursor: int
    history_length: int
    current_version: str
    before_version: str | None
    live_indices: list[int]
    general_description: str


class SessionCreated(BaseModel):
    session_id: str
    general_description: str
    objects: list[ObjectInfo]
    state: StateSummary


class ChatEntryModel(BaseModel):
    heading_level: int | None
    author: str
    text: str
    linked_edit_seq: int | None = None


class ChatLog(BaseModel):
    entries: list[ChatEntryModel]


class ObjectLine(BaseModel):
    index: int
    text: str | None  # None means removed


class VerificationModel(BaseModel):
    summary: str
    judgement: str
    general: str
    objects: list[ObjectLine]


class PromptRequest(BaseModel):
    text: str


class PromptResponse(BaseModel):
    kind: str                       # "question" | "edit"
    tier: str
    answer: str | None = None
    seq: int | None = None
    verification: VerificationModel | None = None
    chat_entries: list[ChatEntryModel]
    state: StateSummary


class Candidate(BaseModel):
    index: int
    description: str


class Problem(BaseModel):
    """Structured error body; ``kind`` is stable and machine-readable."""

    kind: str
    message: str
    candidates: list[Candidate] = []


def chat_entry_model(entry: ChatEntry) -> ChatEntryModel:
    return ChatEntryModel(
        heading_level=entry.heading_level,
        author=entry.author,
        text=entry.text,
        linked_edit_seq=entry.linked_edit_seq,
    )


def state_summary(session: EditSession) -> StateSummary:
    return StateSummary(
        session_id=session.session_id,
        cursor=session.cursor,
        history_length=len(session.history),
        current_version="original" if session.cursor == 0 else str(session.cursor),
        before_version=None if session.cursor == 0 else (
            "original" if session.cursor == 1 else str(session.cursor - 1)
        ),
        live_indices=session.current_registry.live_indices(),
        general_description=session.current_general,
    )


def objects_info(session: EditSession) -> list[ObjectInfo]:
    return [
        ObjectInfo(index=e.index, description=e.description, status=e.status)
        for e in session.current_registry.entries
    ]
