"""Immutable raster snapshots.

ImageBuffer is an 8-bit RGB frame; LabelMap is the companion raster whose
pixel values are object indices (0 = unlabeled). Both freeze their backing
numpy arrays, so snapshots can be shared across threads and history records
without defensive copies: every edit produces a new buffer.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr)
    if out is arr:
        out = arr.copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ImageBuffer:
    """Value-immutable width x height 8-bit RGB raster."""

    _data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self._data.ndim != 3 or self._data.shape[2] != 3:
            raise ValueError("image data must have shape (height, width, 3)")
        if self._data.dtype != np.uint8:
            raise ValueError("image data must be uint8")
        if self._data.shape[0] < 1 or self._data.shape[1] < 1:
            raise ValueError("image must be at least 1x1")

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "ImageBuffer":
        """Snapshot an array; the buffer never aliases writable memory."""
        return cls(_frozen(np.asarray(arr, dtype=np.uint8)))

    @classmethod
    def filled(cls, width: int, height: int, color: tuple[int, int, int]) -> "ImageBuffer":
        arr = np.empty((height, width, 3), dtype=np.uint8)
        arr[:, :] = color
        return cls(_frozen(arr))

    @property
    def width(self) -> int:
        return self._data.shape[1]

    @property
    def height(self) -> int:
        return self._data.shape[0]

    @property
    def pixels(self) -> np.ndarray:
        """Read-only (height, width, 3) uint8 view."""
        return self._data

    def pixel(self, x: int, y: int) -> tuple[int, int, int]:
        r, g, b = self._data[y, x]
        return int(r), int(g), int(b)

    def digest(self) -> str:
        """Hex digest of dimensions plus raw pixel bytes (codec-independent)."""
        h = hashlib.sha256()
        h.update(f"{self.width}x{self.height}:".encode("ascii"))
        h.update(self._data.tobytes())
        return h.hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ImageBuffer):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self) -> int:
        return hash(self.digest())


@dataclass(frozen=True, eq=False)
class LabelMap:
    """Per-pixel object indices; 0 marks unlabeled pixels."""

    _labels: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self._labels.ndim != 2:
            raise ValueError("label data must have shape (height, width)")
        if not np.issubdtype(self._labels.dtype, np.integer):
            raise ValueError("label data must be integer")

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "LabelMap":
        return cls(_frozen(np.asarray(arr, dtype=np.uint16)))

    @classmethod
    def empty(cls, width: int, height: int) -> "LabelMap":
        return cls(_frozen(np.zeros((height, width), dtype=np.uint16)))

    @property
    def width(self) -> int:
        return self._labels.shape[1]

    @property
    def height(self) -> int:
        return self._labels.shape[0]

    @property
    def labels(self) -> np.ndarray:
        """Read-only (height, width) uint16 view."""
        return self._labels

    def indices(self) -> list[int]:
        """Sorted distinct nonzero indices present in the map."""
        vals = np.unique(self._labels)
        return [int(v) for v in vals if v != 0]

    def restrict(self, keep: set[int] | list[int]) -> "LabelMap":
        """New map with labels outside ``keep`` cleared to 0."""
        keep_arr = np.asarray(sorted(set(int(k) for k in keep)), dtype=self._labels.dtype)
        mask = np.isin(self._labels, keep_arr)
        out = np.where(mask, self._labels, 0).astype(np.uint16)
        return LabelMap(_frozen(out))

    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.width}x{self.height}:".encode("ascii"))
        h.update(np.ascontiguousarray(self._labels, dtype=np.uint16).tobytes())
        return h.hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelMap):
            return NotImplemented
        return self._labels.shape == other._labels.shape and bool(
            np.array_equal(self._labels, other._labels)
        )

    def __hash__(self) -> int:
        return hash(self.digest())
