"""Pixel buffers, masks, color math, and overlay rendering."""

from editloop.imaging.buffer import ImageBuffer, LabelMap
from editloop.imaging.color import ColorHSV, hsv_to_rgb, rgb_to_hsv
from editloop.imaging.masks import MaskRegion, dilate_mask, mask_from_label
from editloop.imaging.som import render_som_overlay

__all__ = [
    "ImageBuffer",
    "LabelMap",
    "ColorHSV",
    "rgb_to_hsv",
    "hsv_to_rgb",
    "MaskRegion",
    "mask_from_label",
    "dilate_mask",
    "render_som_overlay",
]
