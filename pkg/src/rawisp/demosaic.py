"""Bilinear demosaicing of Bayer mosaics via masked 3x3 convolution.

Green is interpolated with a cross-shaped kernel, red and blue with a full
3x3 kernel; each kernel runs over the mosaic with the other channels zeroed
out. The kernel weights make every interior output a plain average of the
available same-color neighbors, and the center tap of 1.0 guarantees that
native sites pass through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bayer import BayerImage, channel_mask
from .errors import RawIspError

KERNEL_GREEN = np.array(
    [
        [0.0, 0.25, 0.0],
        [0.25, 1.0, 0.25],
        [0.0, 0.25, 0.0],
    ]
)
KERNEL_GREEN.setflags(write=False)

KERNEL_RED_BLUE = np.array(
    [
        [0.25, 0.5, 0.25],
        [0.5, 1.0, 0.5],
        [0.25, 0.5, 0.25],
    ]
)
KERNEL_RED_BLUE.setflags(write=False)


class BorderMode(Enum):
    """Handling of out-of-bounds taps in same-size convolution.

    ZERO_PAD treats missing pixels as zero, which darkens borders.
    RENORMALIZE_BY_MASK divides by the summed weight of the taps actually
    available (in bounds and mask-selected), turning each output into a
    weighted mean; constant inputs then reproduce exactly everywhere.
    """

    ZERO_PAD = "zeropad"
    RENORMALIZE_BY_MASK = "renorm"


@dataclass(frozen=True)
class RgbImage:
    """Three same-shaped float planes of a demosaiced image."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        planes = []
        for name in ("r", "g", "b"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            if arr.ndim != 2:
                raise RawIspError(f"plane {name} must be 2-D, got shape {arr.shape}")
            planes.append(arr)
        if not (planes[0].shape == planes[1].shape == planes[2].shape):
            raise RawIspError(
                "plane shapes differ: "
                f"{planes[0].shape}, {planes[1].shape}, {planes[2].shape}"
            )
        for name, arr in zip(("r", "g", "b"), planes):
            object.__setattr__(self, name, arr)

    @property
    def height(self) -> int:
        return self.r.shape[0]

    @property
    def width(self) -> int:
        return self.r.shape[1]


def _correlate3x3(plane: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    # Correlation, not convolution: the kernel is applied unflipped. Both
    # demosaic kernels are symmetric so the distinction is unobservable, but
    # the orientation is fixed for test reproducibility.
    h, w = plane.shape
    padded = np.zeros((h + 2, w + 2), dtype=np.float64)
    padded[1:-1, 1:-1] = plane
    out = np.zeros((h, w), dtype=np.float64)
    for u in range(3):
        for v in range(3):
            k = kernel[u, v]
            if k != 0.0:
                out += k * padded[u : u + h, v : v + w]
    return out


def conv2d_same(
    plane: np.ndarray,
    kernel: np.ndarray,
    border: BorderMode = BorderMode.RENORMALIZE_BY_MASK,
    mask: np.ndarray | None = None,
) -> np.ndarray:
    """Same-size 3x3 correlation of ``plane`` with ``kernel``.

    Under ZERO_PAD, out-of-bounds taps contribute zero. Under
    RENORMALIZE_BY_MASK, each output is divided by the kernel weight summed
    over the taps that are in bounds and (when ``mask`` is given) selected by
    the mask; positions with no available taps yield 0.
    """
    plane = np.asarray(plane, dtype=np.float64)
    kernel = np.asarray(kernel, dtype=np.float64)
    if plane.ndim != 2 or plane.size == 0:
        raise RawIspError(f"plane must be a non-empty 2-D array, got shape {plane.shape}")
    if kernel.shape != (3, 3):
        raise RawIspError(f"kernel must be 3x3, got shape {kernel.shape}")
    if mask is not None:
        mask = np.asarray(mask, dtype=np.float64)
        if mask.shape != plane.shape:
            raise RawIspError(f"mask shape {mask.shape} does not match plane shape {plane.shape}")

    num = _correlate3x3(plane, kernel)
    if border is BorderMode.ZERO_PAD:
        return num
    available = np.ones_like(plane) if mask is None else mask
    den = _correlate3x3(available, kernel)
    return np.divide(num, den, out=np.zeros_like(num), where=den > 0)


def bilinear_demosaic(
    img: BayerImage,
    border: BorderMode = BorderMode.RENORMALIZE_BY_MASK,
) -> RgbImage:
    """Interpolate the three channels of a mosaic from same-color neighbors.

    Each channel is the masked convolution of the mosaic with its kernel.
    Values at native sites are returned unchanged in both border modes.
    """
    planes = {}
    for ch in ("R", "G", "B"):
        mask = channel_mask(img, ch).astype(np.float64)
        kernel = KERNEL_GREEN if ch == "G" else KERNEL_RED_BLUE
        planes[ch] = conv2d_same(img.data * mask, kernel, border, mask=mask)
    return RgbImage(planes["R"], planes["G"], planes["B"])
