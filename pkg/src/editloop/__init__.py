"""Object-level image editing with natural-language verification feedback.

The engine applies mask-referenced edits (blur, remove, recolor, brightness,
text) driven by natural-language prompts, and after every edit emits four
kinds of textual verification feedback so the result can be confirmed
without looking at the image.
"""

from editloop.config import EngineConfig
from editloop.imaging import ImageBuffer, LabelMap
from editloop.registry import ObjectRegistry
from editloop.session import EditSession, start_session

__version__ = "0.1.0"

__all__ = [
    "EngineConfig",
    "ImageBuffer",
    "LabelMap",
    "ObjectRegistry",
    "EditSession",
    "start_session",
    "__version__",
]
