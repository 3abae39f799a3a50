"""Label-map sources: fixture files and a remote segmentation service.

The remote protocol (documented in docs/segmentation-protocol.md): POST
the image as a PNG body; the response is JSON with per-object masks as
run-length records over the row-major flattened frame,

    {"width": W, "height": H,
     "masks": [{"rle": [[start, length], ...]}, ...]}

Masks get indices 1..k in response order. Overlapping masks resolve
last-wins per pixel and the overlap is logged, so the outcome is
deterministic and auditable from the response order.
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from editloop.errors import BackendUnavailable, DimensionMismatch, MalformedResponse
from editloop.imaging.buffer import ImageBuffer, LabelMap
from editloop.imaging.fileio import image_to_png_bytes, load_label_map

logger = logging.getLogger(__name__)


def from_fixture(path: str | Path, image: ImageBuffer) -> LabelMap:
    """Load a label-map PNG and validate it against the session image."""
    label_map = load_label_map(path)
    if (label_map.width, label_map.height) != (image.width, image.height):
        raise DimensionMismatch(
            f"label map {label_map.width}x{label_map.height} does not match "
            f"image {image.width}x{image.height}"
        )
    return label_map


def label_map_from_rle_masks(
    width: int, height: int, masks: list[dict]
) -> LabelMap:
    """Convert RLE mask records to a label map, later masks winning overlaps."""
    labels = np.zeros(width * height, dtype=np.uint16)
    overlap_total = 0
    for i, mask in enumerate(masks, start=1):
        runs = mask.get("rle")
        if not isinstance(runs, list):
            raise MalformedResponse(f"mask {i} lacks an 'rle' run list")
        for run in runs:
            if (
                not isinstance(run, (list, tuple))
                or len(run) != 2
                or not all(isinstance(v, int) and v >= 0 for v in run)
            ):
                raise MalformedResponse(f"mask {i} has a bad run: {run!r}")
            start, length = run
            if start + length > width * height:
                raise MalformedResponse(f"mask {i} run exceeds the frame: {run!r}")
            segment = labels[start : start + length]
            overlap_total += int(np.count_nonzero(segment))
            segment[:] = i
    if overlap_total:
        logger.info("segmentation overlap: %d pixels resolved last-wins", overlap_total)
    return LabelMap.from_array(labels.reshape(height, width))


def from_remote(
    image: ImageBuffer, endpoint: str, timeout_s: float = 60.0, client=None
) -> LabelMap:
    """Fetch masks for the image from a segmentation endpoint."""
    import httpx

    client = client or httpx
    try:
        response = client.post(
            endpoint,
            content=image_to_png_bytes(image),
            headers={"Content-Type": "image/png"},
            timeout=timeout_s,
        )
    except Exception as exc:
        raise BackendUnavailable(f"segmentation endpoint unreachable: {exc}") from exc
    if response.status_code != 200:
        raise BackendUnavailable(f"segmentation endpoint returned {response.status_code}")
    try:
        data = response.json()
        masks = data["masks"]
        width = int(data.get("width", image.width))
        height = int(data.get("height", image.height))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedResponse(f"bad segmentation response: {exc}") from exc
    if (width, height) != (image.width, image.height):
        raise MalformedResponse("segmentation response dimensions do not match the image")
    if not isinstance(masks, list):
        raise MalformedResponse("'masks' must be a list")
    return label_map_from_rle_masks(width, height, masks)


class FixtureSegmentation:
    """Provider that always answers with one fixture file."""

    def __init__(self, path: str | Path):
        self._path = Path(path)

    def __call__(self, image: ImageBuffer) -> LabelMap:
        return from_fixture(self._path, image)


class RemoteSegmentation:
    def __init__(self, endpoint: str, timeout_s: float = 60.0, client=None):
        self._endpoint = endpoint
        self._timeout = timeout_s
        self._client = client

    def __call__(self, image: ImageBuffer) -> LabelMap:
        return from_remote(image, self._endpoint, self._timeout, self._client)
