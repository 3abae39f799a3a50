"""Text placement onto a thirds grid or an object.

The frame divides into nine cells; an anchor names one of them and the
text sits in that cell inset by a margin of 2% of the shorter dimension.
Text never wraps: it shrinks from 5% of image height down to 2%, then gets
ellipsis-truncated. Glyph color is black over bright regions and white
over dark ones (mean luma threshold 128, ties go black) with a 1 px
outline in the opposite color. Rendering happens on a separate layer so
the returned bounding box is the exact extent of the changed pixels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw, ImageFont

from editloop.errors import EmptyText
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.color import luma
from editloop.imaging.masks import MaskRegion
from editloop.ops.actions import Anchor

_LUMA_THRESHOLD = 128.0
_ELLIPSIS = "…"


@dataclass(frozen=True)
class TextPlacement:
    """Where and how the text landed."""

    bbox: tuple[int, int, int, int]  # inclusive pixel bounds of changed pixels
    text: str                        # possibly truncated
    font_size: int
    color: tuple[int, int, int]


def _load_font(px: int) -> ImageFont.FreeTypeFont | ImageFont.ImageFont:
    try:
        return ImageFont.load_default(size=px)
    except TypeError:
        return ImageFont.load_default()


def _text_extent(text: str, font, outline_px: int) -> tuple[int, int, int, int]:
    return font.getbbox(text, stroke_width=outline_px)


def _fit_text(
    text: str, max_width: int, size: int, min_size: int, outline_px: int
) -> tuple[str, int]:
    """Shrink first, then ellipsis-truncate at the minimum size."""
    size = max(size, 1)
    min_size = max(min(min_size, size), 1)
    while size > min_size:
        bb = _text_extent(text, _load_font(size), outline_px)
        if bb[2] - bb[0] <= max_width:
            return text, size
        size -= 1

    font = _load_font(size)
    bb = _text_extent(text, font, outline_px)
    if bb[2] - bb[0] <= max_width:
        return text, size
    for cut in range(len(text) - 1, 0, -1):
        candidate = text[:cut].rstrip() + _ELLIPSIS
        bb = _text_extent(candidate, font, outline_px)
        if bb[2] - bb[0] <= max_width:
            return candidate, size
    return text[:1], size


def _anchor_content_box(
    anchor: Anchor, width: int, height: int, margin: int
) -> tuple[int, int, int, int]:
    col = {"left": 0, "center": 1, "right": 2}[anchor.horizontal]
    row = {"top": 0, "center": 1, "bottom": 2}[anchor.vertical]
    x0 = round(col * width / 3) + margin
    x1 = round((col + 1) * width / 3) - margin
    y0 = round(row * height / 3) + margin
    y1 = round((row + 1) * height / 3) - margin
    return x0, y0, max(x1, x0 + 1), max(y1, y0 + 1)


def add_text(
    image: ImageBuffer,
    text: str,
    anchor: Anchor | None = None,
    mask: MaskRegion | None = None,
    size_frac: float = 0.05,
    min_size_frac: float = 0.02,
    margin_frac: float = 0.02,
    outline_px: int = 1,
) -> tuple[ImageBuffer, TextPlacement]:
    """Render one line of text at an anchor cell or over an object.

    Exactly one of ``anchor`` / ``mask`` must be given.
    """
    if not text or not text.strip():
        raise EmptyText("cannot place empty text")
    if (anchor is None) == (mask is None):
        raise ValueError("provide exactly one of anchor or mask")
    text = text.strip()

    w, h = image.width, image.height
    margin = max(1, round(margin_frac * min(w, h)))
    start_size = max(1, round(size_frac * h))
    min_size = max(1, round(min_size_frac * h))

    if anchor is not None:
        cx0, cy0, cx1, cy1 = _anchor_content_box(anchor, w, h, margin)
        max_width = cx1 - cx0
    else:
        max_width = max(1, w - 2 * margin)

    fitted, size = _fit_text(text, max_width, start_size, min_size, outline_px)
    font = _load_font(size)
    tb = _text_extent(fitted, font, outline_px)
    tw, th = tb[2] - tb[0], tb[3] - tb[1]

    if anchor is not None:
        if anchor.horizontal == "left":
            bx0 = cx0
        elif anchor.horizontal == "right":
            bx0 = cx1 - tw
        else:
            bx0 = (cx0 + cx1 - tw) // 2
        if anchor.vertical == "top":
            by0 = cy0
        elif anchor.vertical == "bottom":
            by0 = cy1 - th
        else:
            by0 = (cy0 + cy1 - th) // 2
    else:
        assert mask is not None
        mx, my = mask.centroid
        bx0 = mx - tw // 2
        by0 = my - th // 2

    # Nudge fully inside the frame.
    bx0 = min(max(bx0, 0), max(w - tw, 0))
    by0 = min(max(by0, 0), max(h - th, 0))

    # Contrast decision over the pixels the text is about to cover.
    px1 = min(bx0 + tw, w) - 1
    py1 = min(by0 + th, h) - 1
    patch = image.pixels[by0 : py1 + 1, bx0 : px1 + 1].astype(np.float64)
    mean_luma = float(luma(patch[..., 0], patch[..., 1], patch[..., 2]).mean())
    if mean_luma >= _LUMA_THRESHOLD:
        color, outline = (0, 0, 0), (255, 255, 255)
    else:
        color, outline = (255, 255, 255), (0, 0, 0)

    # Draw on a transparent layer so the changed-pixel extent is exact.
    layer = Image.new("RGBA", (w, h), (0, 0, 0, 0))
    draw = ImageDraw.Draw(layer)
    draw.text(
        (bx0 - tb[0], by0 - tb[1]),
        fitted,
        font=font,
        fill=color + (255,),
        stroke_width=outline_px,
        stroke_fill=outline + (255,),
    )

    alpha = np.asarray(layer)[:, :, 3]
    touched = alpha > 0
    if not touched.any():
        # Whitespace-only glyph run; nothing painted.
        placement = TextPlacement((bx0, by0, bx0, by0), fitted, size, color)
        return ImageBuffer.from_array(image.pixels), placement

    base = Image.fromarray(np.asarray(image.pixels)).convert("RGBA")
    composited = Image.alpha_composite(base, layer).convert("RGB")
    out = np.array(composited, dtype=np.uint8)
    out[~touched] = image.pixels[~touched]

    ys, xs = np.nonzero(touched)
    bbox = (int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))
    placement = TextPlacement(bbox, fitted, size, color)
    return ImageBuffer.from_array(out), placement
