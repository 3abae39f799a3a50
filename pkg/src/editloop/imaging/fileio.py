"""Image and label-map file handling.

Photos load from PNG or JPEG and are flattened to 8-bit RGB (alpha is
dropped). Saving always goes through PNG so snapshots survive bit-exact.
Label maps are single-channel 16-bit PNGs whose pixel value is the object
index, 0 for unlabeled.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from editloop.errors import UnreadableFile
from editloop.imaging.buffer import ImageBuffer, LabelMap


def load_image(source: str | Path | bytes) -> ImageBuffer:
    """Load a PNG or JPEG photo as an RGB buffer."""
    try:
        if isinstance(source, bytes):
            im = Image.open(io.BytesIO(source))
        else:
            im = Image.open(source)
        im.load()
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise UnreadableFile(f"cannot read image: {exc}") from exc
    return ImageBuffer.from_array(np.asarray(im.convert("RGB"), dtype=np.uint8))


def image_to_png_bytes(buf: ImageBuffer) -> bytes:
    out = io.BytesIO()
    Image.fromarray(np.asarray(buf.pixels)).save(out, format="PNG")
    return out.getvalue()


def save_image_png(buf: ImageBuffer, path: str | Path) -> None:
    Path(path).write_bytes(image_to_png_bytes(buf))


def load_label_map(source: str | Path | bytes) -> LabelMap:
    """Load a 16-bit single-channel PNG of object indices."""
    try:
        if isinstance(source, bytes):
            im = Image.open(io.BytesIO(source))
        else:
            im = Image.open(source)
        im.load()
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise UnreadableFile(f"cannot read label map: {exc}") from exc
    if im.mode not in ("I", "I;16", "L", "P"):
        raise UnreadableFile(f"label map must be single-channel, got mode {im.mode}")
    if im.mode == "P":
        im = im.convert("L")
    arr = np.asarray(im)
    if arr.ndim != 2:
        raise UnreadableFile("label map must be single-channel")
    if arr.max(initial=0) > np.iinfo(np.uint16).max:
        raise UnreadableFile("label values exceed 16-bit range")
    return LabelMap.from_array(arr.astype(np.uint16))


def label_map_to_png_bytes(label_map: LabelMap) -> bytes:
    out = io.BytesIO()
    Image.fromarray(np.asarray(label_map.labels, dtype=np.uint16), mode="I;16").save(
        out, format="PNG"
    )
    return out.getvalue()


def save_label_map_png(label_map: LabelMap, path: str | Path) -> None:
    Path(path).write_bytes(label_map_to_png_bytes(label_map))
