"""Index-overlay rendering for object-aware model prompting.

Draws every labeled object's boundary in a double high-contrast stroke
(white on the object rim, black just outside it) and stamps a filled badge
with the decimal index near the object centroid. The badge fill flips
between white and black depending on the local mean luma so the digits
stay readable on any background. Pure function: the input buffer is never
touched and the same (image, label map) pair always renders identical
bytes.
"""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw, ImageFont

from editloop.imaging.buffer import ImageBuffer, LabelMap
from editloop.imaging.color import luma
from editloop.imaging.masks import mask_from_label

_WHITE = (255, 255, 255)
_BLACK = (0, 0, 0)
_LUMA_THRESHOLD = 128.0


def _boundary_rings(bitmap: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inner rim (member pixels touching outside) and outer ring just beyond it."""
    h, w = bitmap.shape
    padded = np.pad(bitmap, 1, mode="constant", constant_values=False)
    neighbor_out = (
        ~padded[:-2, 1:-1] | ~padded[2:, 1:-1] | ~padded[1:-1, :-2] | ~padded[1:-1, 2:]
    )
    inner = bitmap & neighbor_out

    padded_in = np.pad(inner, 1, mode="constant", constant_values=False)
    near_inner = (
        padded_in[:-2, 1:-1] | padded_in[2:, 1:-1] | padded_in[1:-1, :-2] | padded_in[1:-1, 2:]
        | padded_in[:-2, :-2] | padded_in[:-2, 2:] | padded_in[2:, :-2] | padded_in[2:, 2:]
    )
    outer = near_inner & ~bitmap
    return inner, outer


def badge_side(width: int, height: int) -> int:
    return max(12, round(0.03 * min(width, height)))


def _badge_font(px: int) -> ImageFont.ImageFont | ImageFont.FreeTypeFont:
    try:
        return ImageFont.load_default(size=px)
    except TypeError:  # very old Pillow without scalable default
        return ImageFont.load_default()


def render_som_overlay(image: ImageBuffer, label_map: LabelMap) -> ImageBuffer:
    """New buffer with boundary strokes and one index badge per object."""
    if (image.width, image.height) != (label_map.width, label_map.height):
        raise ValueError("image and label map dimensions differ")

    indices = label_map.indices()
    if not indices:
        return ImageBuffer.from_array(image.pixels)

    canvas = np.array(image.pixels, dtype=np.uint8)
    for index in indices:
        bitmap = label_map.labels == index
        inner, outer = _boundary_rings(bitmap)
        canvas[outer] = _BLACK
        canvas[inner] = _WHITE

    pil = Image.fromarray(canvas)
    draw = ImageDraw.Draw(pil)
    side = badge_side(image.width, image.height)
    font = _badge_font(max(8, int(side * 0.7)))

    src = image.pixels.astype(np.float64)
    for index in indices:
        region = mask_from_label(label_map, index)
        cx, cy = region.centroid
        text = str(index)
        tb = draw.textbbox((0, 0), text, font=font)
        tw, th = tb[2] - tb[0], tb[3] - tb[1]
        bw = max(side, tw + 4)
        bh = side

        x0 = cx - bw // 2
        y0 = cy - bh // 2
        # Nudge the badge fully inside the frame.
        x0 = min(max(x0, 0), image.width - bw)
        y0 = min(max(y0, 0), image.height - bh)
        x0 = max(x0, 0)
        y0 = max(y0, 0)
        x1 = min(x0 + bw, image.width) - 1
        y1 = min(y0 + bh, image.height) - 1

        patch = src[y0 : y1 + 1, x0 : x1 + 1]
        mean_luma = float(luma(patch[..., 0], patch[..., 1], patch[..., 2]).mean())
        fill = _BLACK if mean_luma >= _LUMA_THRESHOLD else _WHITE
        ink = _WHITE if fill == _BLACK else _BLACK

        draw.rectangle((x0, y0, x1, y1), fill=fill)
        tx = x0 + (x1 - x0 + 1 - tw) // 2 - tb[0]
        ty = y0 + (y1 - y0 + 1 - th) // 2 - tb[1]
        draw.text((tx, ty), text, fill=ink, font=font)

    return ImageBuffer.from_array(np.asarray(pil, dtype=np.uint8))
