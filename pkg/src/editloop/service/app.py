"""FastAPI application wrapping the engine.

Handlers are synchronous on purpose: FastAPI runs them in a thread pool
and the per-session lock in SessionManager provides write serialization.
Every engine error maps to a structured problem body (kind, message,
candidates) so clients — including screen readers — can speak the error
verbatim.
"""

from __future__ import annotations

from fastapi import FastAPI, File, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from editloop.config import EngineConfig
from editloop.errors import (
    AmbiguousReference,
    BackendRefused,
    BackendUnavailable,
    DimensionMismatch,
    EditLimitReached,
    EmptyMask,
    EmptyPrompt,
    EmptyText,
    EngineError,
    GroundingViolation,
    MalformedResponse,
    MaskCoversImage,
    MissingIndexInResponse,
    MissingParameter,
    NoMatchingObject,
    NothingToRedo,
    NothingToUndo,
    ObjectNotLive,
    ReferenceError_,
    UnknownColorName,
    UnknownObjectIndex,
    UnmatchedScriptRequest,
    UnreadableFile,
    UnrecognizedAction,
)
from editloop.backends.base import VisionBackend
from editloop.service.manager import (
    PromptQueueFull,
    SessionManager,
    UnknownImageVersion,
    UnknownSession,
)
from editloop.service.models import (
    Candidate,
    ChatLog,
    ObjectLine,
    Problem,
    PromptRequest,
    PromptResponse,
    SessionCreated,
    StateSummary,
    VerificationModel,
    chat_entry_model,
    objects_info,
    state_summary,
)
from editloop.service.store import SessionStore
from editloop.session import EditSession

_STATUS_BY_ERROR: list[tuple[type[EngineError], int]] = [
    (UnknownSession, 404),
    (UnknownImageVersion, 404),
    (UnreadableFile, 400),
    (DimensionMismatch, 400),
    (PromptQueueFull, 409),
    (NothingToUndo, 409),
    (NothingToRedo, 409),
    (EditLimitReached, 409),
    (EmptyPrompt, 422),
    (UnrecognizedAction, 422),
    (MissingParameter, 422),
    (AmbiguousReference, 422),
    (NoMatchingObject, 422),
    (UnknownObjectIndex, 422),
    (ObjectNotLive, 422),
    (UnknownColorName, 422),
    (EmptyText, 422),
    (EmptyMask, 422),
    (MaskCoversImage, 422),
    (BackendUnavailable, 502),
    (BackendRefused, 502),
    (UnmatchedScriptRequest, 502),
    (MissingIndexInResponse, 502),
    (MalformedResponse, 502),
    (GroundingViolation, 502),
]


def _status_for(exc: EngineError) -> int:
    for klass, status in _STATUS_BY_ERROR:
        if isinstance(exc, klass):
            return status
    return 500


def _problem_response(exc: EngineError) -> JSONResponse:
    candidates = []
    if isinstance(exc, ReferenceError_):
        candidates = [
            Candidate(index=i, description=d) for i, d in exc.candidates
        ]
    body = Problem(kind=exc.kind, message=exc.message, candidates=candidates)
    return JSONResponse(status_code=_status_for(exc), content=body.model_dump())


def _verification_model(session: EditSession, seq: int) -> VerificationModel:
    bundle = session.history[seq - 1].verification
    return VerificationModel(
        summary=bundle.summary,
        judgement=bundle.judgement,
        general=bundle.general,
        objects=[ObjectLine(index=i, text=t) for i, t in bundle.objects],
    )


def create_app(
    store: SessionStore,
    backend: VisionBackend,
    config: EngineConfig | None = None,
    segmentation_provider=None,
) -> FastAPI:
    config = config or EngineConfig()
    manager = SessionManager(
        store, backend, config, segmentation_provider=segmentation_provider
    )

    app = FastAPI(title="editloop", version="0.1.0")
    app.state.manager = manager
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(EngineError)
    def engine_error_handler(_request, exc: EngineError):
        return _problem_response(exc)

    @app.post("/sessions", response_model=SessionCreated)
    def create_session(
        image: UploadFile = File(...),
        label_map: UploadFile | None = File(default=None),
    ):
        image_bytes = image.file.read()
        label_bytes = label_map.file.read() if label_map is not None else None
        session = manager.create_session(image_bytes, label_bytes)
        return SessionCreated(
            session_id=session.session_id,
            general_description=session.initial_general,
            objects=objects_info(session),
            state=state_summary(session),
        )

    @app.get("/sessions/{session_id}", response_model=SessionCreated)
    def session_info(session_id: str):
        session = manager.session(session_id)
        return SessionCreated(
            session_id=session.session_id,
            general_description=session.initial_general,
            objects=objects_info(session),
            state=state_summary(session),
        )

    @app.post("/sessions/{session_id}/prompts", response_model=PromptResponse)
    def post_prompt(session_id: str, request: PromptRequest):
        outcome = manager.prompt(session_id, request.text)
        session = manager.session(session_id)
        seq = outcome.record.seq if outcome.record else None
        return PromptResponse(
            kind=outcome.kind,
            tier=outcome.tier,
            answer=outcome.answer,
            seq=seq,
            verification=_verification_model(session, seq) if seq else None,
            chat_entries=[chat_entry_model(e) for e in outcome.chat_added],
            state=state_summary(session),
        )

    @app.post("/sessions/{session_id}/undo", response_model=StateSummary)
    def post_undo(session_id: str):
        return state_summary(manager.undo(session_id))

    @app.post("/sessions/{session_id}/redo", response_model=StateSummary)
    def post_redo(session_id: str):
        return state_summary(manager.redo(session_id))

    @app.get("/sessions/{session_id}/images/{version}")
    def get_image(session_id: str, version: str):
        payload = manager.image_bytes(session_id, version)
        return Response(content=payload, media_type="image/png")

    @app.get("/sessions/{session_id}/chat", response_model=ChatLog)
    def get_chat(session_id: str):
        session = manager.session(session_id)
        return ChatLog(entries=[chat_entry_model(e) for e in session.chat])

    @app.get("/sessions/{session_id}/transcript")
    def get_transcript(session_id: str):
        from editloop.transcript import build_transcript

        session = manager.session(session_id)
        return JSONResponse(content=build_transcript(session))

    return app
