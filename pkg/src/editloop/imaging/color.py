"""Hexcone HSV color math.

Hue is kept in degrees [0, 360) because that is how the edit layer reasons
about color targets. Array variants operate on float channel planes so the
recolor action can rewrite whole masked regions in one pass; the scalar
functions are thin wrappers over the same formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ColorHSV:
    """h in degrees [0, 360); s and v fractions in [0, 1].

    Achromatic colors (s == 0) carry the canonical hue 0.
    """

    h: float
    s: float
    v: float

    def __post_init__(self):
        if not (0.0 <= self.h < 360.0):
            raise ValueError(f"hue out of range: {self.h}")
        if not (0.0 <= self.s <= 1.0):
            raise ValueError(f"saturation out of range: {self.s}")
        if not (0.0 <= self.v <= 1.0):
            raise ValueError(f"value out of range: {self.v}")


def rgb_to_hsv_arrays(
    r: np.ndarray, g: np.ndarray, b: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized hexcone conversion; channels are floats in [0, 255]."""
    r = r / 255.0
    g = g / 255.0
    b = b / 255.0
    mx = np.maximum(np.maximum(r, g), b)
    mn = np.minimum(np.minimum(r, g), b)
    delta = mx - mn

    h = np.zeros_like(mx)
    nonzero = delta > 0
    # Sector formulas; np.where keeps the computation branch-free.
    rmax = nonzero & (mx == r)
    gmax = nonzero & (mx == g) & ~rmax
    bmax = nonzero & ~rmax & ~gmax
    with np.errstate(invalid="ignore", divide="ignore"):
        h = np.where(rmax, ((g - b) / np.where(delta == 0, 1, delta)) % 6.0, h)
        h = np.where(gmax, (b - r) / np.where(delta == 0, 1, delta) + 2.0, h)
        h = np.where(bmax, (r - g) / np.where(delta == 0, 1, delta) + 4.0, h)
    h = (h * 60.0) % 360.0

    s = np.where(mx > 0, delta / np.where(mx == 0, 1, mx), 0.0)
    return h, s, mx


def hsv_to_rgb_arrays(
    h: np.ndarray, s: np.ndarray, v: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Inverse hexcone conversion; returns float channels in [0, 255]."""
    h = np.asarray(h, dtype=np.float64) % 360.0
    s = np.asarray(s, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)

    c = v * s
    hp = h / 60.0
    x = c * (1.0 - np.abs(hp % 2.0 - 1.0))
    m = v - c

    sector = np.floor(hp).astype(np.int64) % 6
    zeros = np.zeros_like(c)
    r1 = np.choose(sector, [c, x, zeros, zeros, x, c])
    g1 = np.choose(sector, [x, c, c, x, zeros, zeros])
    b1 = np.choose(sector, [zeros, zeros, x, c, c, x])

    return (r1 + m) * 255.0, (g1 + m) * 255.0, (b1 + m) * 255.0


def rgb_to_hsv(color: tuple[int, int, int]) -> ColorHSV:
    """Convert one 8-bit RGB triple."""
    r, g, b = (float(c) for c in color)
    h, s, v = rgb_to_hsv_arrays(np.float64(r), np.float64(g), np.float64(b))
    return ColorHSV(float(h) % 360.0, min(float(s), 1.0), min(float(v), 1.0))


def hsv_to_rgb(color: ColorHSV) -> tuple[int, int, int]:
    """Convert back to an 8-bit RGB triple (round-to-nearest, clamped)."""
    r, g, b = hsv_to_rgb_arrays(
        np.float64(color.h), np.float64(color.s), np.float64(color.v)
    )
    out = np.clip(np.round(np.array([r, g, b])), 0, 255).astype(np.uint8)
    return int(out[0]), int(out[1]), int(out[2])


def luma(r: np.ndarray, g: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rec. 601 luma used for contrast decisions (text and badge colors)."""
    return 0.299 * r + 0.587 * g + 0.114 * b
