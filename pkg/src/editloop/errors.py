"""Exception hierarchy shared across the engine.

Every error that can surface to a user (CLI message, HTTP problem body)
derives from EngineError and carries a stable ``kind`` string so clients
can react programmatically instead of parsing prose.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class; ``kind`` identifies the error across process boundaries."""

    kind = "engine_error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


# --- image / mask ---------------------------------------------------------

class UnknownObjectIndex(EngineError):
    kind = "unknown_object_index"


class EmptyMask(EngineError):
    kind = "empty_mask"


class MaskCoversImage(EngineError):
    kind = "mask_covers_image"


class DimensionMismatch(EngineError):
    kind = "dimension_mismatch"


class UnreadableFile(EngineError):
    kind = "unreadable_file"


# --- edit parameters ------------------------------------------------------

class UnknownColorName(EngineError):
    kind = "unknown_color_name"


class EmptyText(EngineError):
    kind = "empty_text"


# --- prompt routing -------------------------------------------------------

class EmptyPrompt(EngineError):
    kind = "empty_prompt"


class UnrecognizedAction(EngineError):
    kind = "unrecognized_action"


class MissingParameter(EngineError):
    kind = "missing_parameter"


class ReferenceError_(EngineError):
    """Base for object-reference failures; carries candidate indices."""

    def __init__(self, message: str = "", candidates: list[tuple[int, str]] | None = None):
        super().__init__(message)
        self.candidates = candidates or []


class AmbiguousReference(ReferenceError_):
    kind = "ambiguous_reference"


class NoMatchingObject(ReferenceError_):
    kind = "no_matching_object"


class ObjectNotLive(EngineError):
    kind = "object_not_live"


# --- session --------------------------------------------------------------

class NothingToUndo(EngineError):
    kind = "nothing_to_undo"


class NothingToRedo(EngineError):
    kind = "nothing_to_redo"


class SegmentationUnavailable(EngineError):
    kind = "segmentation_unavailable"


class EditLimitReached(EngineError):
    kind = "edit_limit_reached"


# --- backends -------------------------------------------------------------

class BackendUnavailable(EngineError):
    kind = "backend_unavailable"


class BackendRefused(EngineError):
    kind = "backend_refused"


class MissingIndexInResponse(EngineError):
    kind = "missing_index_in_response"


class UnmatchedScriptRequest(EngineError):
    kind = "unmatched_script_request"


class GroundingViolation(EngineError):
    """A backend request broke the per-kind image/text cardinality contract."""

    kind = "grounding_violation"


class MalformedResponse(EngineError):
    kind = "malformed_response"


class MissingFixture(EngineError):
    kind = "missing_fixture"
