"""Mask regions derived from label maps.

A MaskRegion is a per-pixel boolean view over one object index, with the
tight bounding box and the rounded mean-coordinate centroid precomputed
because every edit action and the overlay renderer need them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from editloop.errors import UnknownObjectIndex
from editloop.imaging.buffer import LabelMap, _frozen


@dataclass(frozen=True, eq=False)
class MaskRegion:
    object_index: int
    bitmap: np.ndarray = field(repr=False)   # read-only bool (height, width)
    bbox: tuple[int, int, int, int]          # inclusive (x0, y0, x1, y1)
    centroid: tuple[int, int]                # (x, y)

    @classmethod
    def from_bitmap(cls, object_index: int, bitmap: np.ndarray) -> "MaskRegion":
        bitmap = np.asarray(bitmap, dtype=bool)
        ys, xs = np.nonzero(bitmap)
        if len(xs) == 0:
            raise ValueError("mask bitmap is empty")
        bbox = (int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))
        # Round half away from zero so the centroid is stable across numpy versions.
        cx = int(np.floor(xs.mean() + 0.5))
        cy = int(np.floor(ys.mean() + 0.5))
        return cls(int(object_index), _frozen(bitmap), bbox, (cx, cy))

    @property
    def area(self) -> int:
        return int(self.bitmap.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaskRegion):
            return NotImplemented
        return self.object_index == other.object_index and bool(
            np.array_equal(self.bitmap, other.bitmap)
        )


def mask_from_label(label_map: LabelMap, index: int) -> MaskRegion:
    """Mask of exactly the pixels labeled ``index``.

    Raises UnknownObjectIndex when the index has no support in the map.
    """
    bitmap = label_map.labels == index
    if index <= 0 or not bitmap.any():
        raise UnknownObjectIndex(f"object index {index} not present in label map")
    return MaskRegion.from_bitmap(index, bitmap)


def disc_offsets(radius: int) -> list[tuple[int, int]]:
    """Offsets (dy, dx) with Euclidean distance <= radius."""
    offs = []
    for dy in range(-radius, radius + 1):
        for dx in range(-radius, radius + 1):
            if dy * dy + dx * dx <= radius * radius:
                offs.append((dy, dx))
    return offs


def dilate_bitmap(bitmap: np.ndarray, radius: int) -> np.ndarray:
    """Morphological dilation by a Euclidean disc, clipped to the frame."""
    if radius <= 0:
        return bitmap.copy()
    h, w = bitmap.shape
    out = np.zeros_like(bitmap, dtype=bool)
    for dy, dx in disc_offsets(radius):
        ys0, ys1 = max(0, dy), min(h, h + dy)
        xs0, xs1 = max(0, dx), min(w, w + dx)
        out[ys0:ys1, xs0:xs1] |= bitmap[ys0 - dy : ys1 - dy, xs0 - dx : xs1 - dx]
    return out


def dilate_mask(mask: MaskRegion, radius: int) -> MaskRegion:
    """Dilate by a disc of the given radius (radius 0 is the identity)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius == 0:
        return mask
    return MaskRegion.from_bitmap(mask.object_index, dilate_bitmap(mask.bitmap, radius))
