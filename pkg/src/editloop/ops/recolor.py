"""Object recoloring via hue rewrite.

Masked pixels take the target hue while keeping their own brightness, so
shading and texture survive. Two regimes:

- chromatic target (saturation >= 0.2): hue := target hue, value kept,
  saturation floored at 0.4 x target saturation so washed-out or gray
  pixels still visibly take the color;
- achromatic target (black / white / gray): saturation := 0 and value
  pulled 80% of the way toward the target's value, since a hue rewrite
  alone cannot darken or whiten anything.
"""

from __future__ import annotations

import numpy as np

from editloop.errors import EmptyMask
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.color import ColorHSV, hsv_to_rgb_arrays, rgb_to_hsv_arrays
from editloop.imaging.masks import MaskRegion

CHROMATIC_SATURATION = 0.2
SATURATION_FLOOR_FACTOR = 0.4
ACHROMATIC_VALUE_PULL = 0.8


def change_color(image: ImageBuffer, mask: MaskRegion, target: ColorHSV) -> ImageBuffer:
    if mask.area == 0:
        raise EmptyMask("recolor requires a nonempty mask")
    if mask.bitmap.shape != (image.height, image.width):
        raise ValueError("mask and image dimensions differ")

    pixels = image.pixels.astype(np.float64)
    sel = mask.bitmap
    r, g, b = pixels[sel, 0], pixels[sel, 1], pixels[sel, 2]
    h, s, v = rgb_to_hsv_arrays(r, g, b)

    if target.s >= CHROMATIC_SATURATION:
        h = np.full_like(h, target.h)
        s = np.maximum(s, SATURATION_FLOOR_FACTOR * target.s)
    else:
        h = np.zeros_like(h)
        s = np.zeros_like(s)
        v = v + ACHROMATIC_VALUE_PULL * (target.v - v)

    nr, ng, nb = hsv_to_rgb_arrays(h, s, v)
    out = np.array(image.pixels, dtype=np.uint8)
    out[sel, 0] = np.clip(np.round(nr), 0, 255).astype(np.uint8)
    out[sel, 1] = np.clip(np.round(ng), 0, 255).astype(np.uint8)
    out[sel, 2] = np.clip(np.round(nb), 0, 255).astype(np.uint8)
    return ImageBuffer.from_array(out)
