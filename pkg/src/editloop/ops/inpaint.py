"""Fill strategies for object removal.

The baseline is a deterministic onion-peel: each pass assigns every
still-unfilled pixel that touches known pixels the mean of its known
8-neighbors, using only values from before the pass, then marks the whole
ring known. Values therefore always stay within the [min, max] range of
the original boundary ring. The remote strategy ships the image and mask
to an external inpainting service instead.
"""

from __future__ import annotations

import io
from typing import Protocol

import numpy as np

from editloop.errors import BackendUnavailable, MaskCoversImage
from editloop.imaging.buffer import ImageBuffer
from editloop.imaging.masks import MaskRegion

_NEIGHBOR_OFFSETS = [
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1), (0, 1),
    (1, -1), (1, 0), (1, 1),
]


def inpaint_boundary_fill(image: ImageBuffer, fill: MaskRegion) -> ImageBuffer:
    """Fill the masked region from its boundary inward, layer by layer."""
    bitmap = fill.bitmap
    if bitmap.shape != (image.height, image.width):
        raise ValueError("fill mask and image dimensions differ")
    if not bitmap.any():
        return ImageBuffer.from_array(image.pixels)
    if bitmap.all():
        raise MaskCoversImage("fill region covers the entire image")

    values = image.pixels.astype(np.float64)
    known = ~bitmap.copy()
    h, w = bitmap.shape

    while not known.all():
        acc = np.zeros((h, w, 3), dtype=np.float64)
        count = np.zeros((h, w), dtype=np.float64)
        for dy, dx in _NEIGHBOR_OFFSETS:
            ys0, ys1 = max(0, dy), min(h, h + dy)
            xs0, xs1 = max(0, dx), min(w, w + dx)
            src_known = known[ys0 - dy : ys1 - dy, xs0 - dx : xs1 - dx]
            src_vals = values[ys0 - dy : ys1 - dy, xs0 - dx : xs1 - dx]
            acc[ys0:ys1, xs0:xs1] += np.where(src_known[..., None], src_vals, 0.0)
            count[ys0:ys1, xs0:xs1] += src_known
        ring = ~known & (count > 0)
        values[ring] = acc[ring] / count[ring][:, None]
        known |= ring

    out = np.clip(np.round(values), 0, 255).astype(np.uint8)
    # Outside the fill region nothing may drift, not even by rounding.
    outside = ~bitmap
    out[outside] = image.pixels[outside]
    return ImageBuffer.from_array(out)


class InpaintStrategy(Protocol):
    """Synthesizes pixel content for a fill region."""

    name: str

    def fill(self, image: ImageBuffer, fill_region: MaskRegion) -> ImageBuffer: ...


class BaselineInpaint:
    """In-process onion-peel fill."""

    name = "baseline"

    def fill(self, image: ImageBuffer, fill_region: MaskRegion) -> ImageBuffer:
        return inpaint_boundary_fill(image, fill_region)


class RemoteInpaint:
    """POSTs the frame and mask to an external inpainting endpoint.

    Wire format: multipart body with an ``image`` PNG and a binary
    ``mask`` PNG (255 inside the fill region); the response body is the
    inpainted PNG at identical dimensions.
    """

    name = "remote"

    def __init__(self, endpoint: str, timeout_s: float = 60.0, client=None):
        self._endpoint = endpoint
        self._timeout = timeout_s
        self._client = client

    def fill(self, image: ImageBuffer, fill_region: MaskRegion) -> ImageBuffer:
        import httpx
        from PIL import Image

        from editloop.imaging.fileio import image_to_png_bytes, load_image

        mask_png = io.BytesIO()
        Image.fromarray((fill_region.bitmap * np.uint8(255))).save(mask_png, format="PNG")
        files = {
            "image": ("image.png", image_to_png_bytes(image), "image/png"),
            "mask": ("mask.png", mask_png.getvalue(), "image/png"),
        }
        client = self._client or httpx
        try:
            resp = client.post(self._endpoint, files=files, timeout=self._timeout)
        except Exception as exc:
            raise BackendUnavailable(f"inpaint endpoint unreachable: {exc}") from exc
        if resp.status_code != 200:
            raise BackendUnavailable(f"inpaint endpoint returned {resp.status_code}")
        result = load_image(resp.content)
        if (result.width, result.height) != (image.width, image.height):
            raise BackendUnavailable("inpaint endpoint returned mismatched dimensions")
        return result
