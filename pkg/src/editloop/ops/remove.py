"""Object removal.

The fill region is the mask dilated by a configurable halo (default 5 px)
so fringe pixels around the object's edge do not survive as a ghost
outline. Only the dilated region is rewritten; the strategy decides what
goes there.
"""

from __future__ import annotations

import numpy as np

from editloop.errors import EmptyMask, MaskCoversImage
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.masks import MaskRegion, dilate_mask
from editloop.ops.inpaint import BaselineInpaint, InpaintStrategy


def remove_object(
    image: ImageBuffer,
    mask: MaskRegion,
    strategy: InpaintStrategy | None = None,
    dilation_radius: int = 5,
) -> ImageBuffer:
    if mask.area == 0:
        raise EmptyMask("removal requires a nonempty mask")
    if mask.bitmap.shape != (image.height, image.width):
        raise ValueError("mask and image dimensions differ")
    if mask.bitmap.all():
        raise MaskCoversImage("cannot remove an object covering the whole image")

    fill_region = dilate_mask(mask, dilation_radius)
    if fill_region.bitmap.all():
        raise MaskCoversImage("dilated fill region covers the whole image")

    strategy = strategy or BaselineInpaint()
    filled = strategy.fill(image, fill_region)

    # The strategy may only have touched the fill region; enforce it.
    out = np.array(image.pixels, dtype=np.uint8)
    out[fill_region.bitmap] = filled.pixels[fill_region.bitmap]
    return ImageBuffer.from_array(out)
