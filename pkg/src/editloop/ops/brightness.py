"""Per-channel brightness stepping.

Every channel of every masked pixel moves by exactly the configured step
(default 40), clamped to [0, 255]. Clamping means repeated darkening of an
already-black pixel is a no-op rather than an error.
"""

from __future__ import annotations

import numpy as np

from editloop.errors import EmptyMask
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.masks import MaskRegion
from editloop.ops.actions import BrightnessDirection


def adjust_brightness(
    image: ImageBuffer,
    mask: MaskRegion,
    direction: BrightnessDirection,
    step: int = 40,
) -> ImageBuffer:
    if mask.area == 0:
        raise EmptyMask("brightness adjustment requires a nonempty mask")
    if mask.bitmap.shape != (image.height, image.width):
        raise ValueError("mask and image dimensions differ")

    delta = step if direction == BrightnessDirection.BRIGHTER else -step
    out = image.pixels.astype(np.int16)
    region = out[mask.bitmap]
    out[mask.bitmap] = np.clip(region + delta, 0, 255)
    return ImageBuffer.from_array(out.astype(np.uint8))
