"""Bayer mosaic images: validation, cropping, and pattern-preserving downsampling.

A Bayer image is a single plane in which each pixel records one color channel
according to a 2x2-periodic color filter array. Downsampling by an odd factor
``d`` averages same-color sites inside each ``2d x 2d`` patch, so the output is
again a valid mosaic with the same pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import RawIspError


class BayerPattern(Enum):
    """Color filter layout of one 2x2 cell, in (0,0),(0,1),(1,0),(1,1) order."""

    RGGB = "RGGB"
    BGGR = "BGGR"
    GRBG = "GRBG"
    GBRG = "GBRG"

    def color_at(self, row: int, col: int) -> str:
        """Channel letter ('R', 'G' or 'B') at an absolute pixel position."""
        return self.value[2 * (row % 2) + (col % 2)]


class CropPolicy(Enum):
    REQUIRE_EXACT = "exact"
    CROP_TRAILING = "crop"


@dataclass(frozen=True)
class DownsampleSpec:
    """Odd per-dimension downsampling factor plus the dimension policy."""

    d: int
    crop_policy: CropPolicy = CropPolicy.CROP_TRAILING

    def __post_init__(self):
        _check_factor(self.d)


@dataclass(frozen=True)
class BayerImage:
    """Immutable single-plane mosaic with real-valued intensities.

    ``data`` is stored as a read-only float64 array. Values are digital
    numbers in ``[0, 2**bit_depth - 1]``; they may be non-integer (e.g.
    after downsampling) and are never re-quantized by this module.
    """

    data: np.ndarray
    pattern: BayerPattern = BayerPattern.RGGB
    bit_depth: int = 12

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise RawIspError(f"mosaic data must be a non-empty 2-D array, got shape {arr.shape}")
        h, w = arr.shape
        if h % 2 or w % 2:
            raise RawIspError(f"mosaic dimensions must be even, got {h}x{w}")
        if not isinstance(self.bit_depth, int) or self.bit_depth < 1:
            raise RawIspError(f"bit_depth must be a positive integer, got {self.bit_depth!r}")
        if not np.all(np.isfinite(arr)):
            raise RawIspError("mosaic values must be finite")
        max_dn = float(2**self.bit_depth - 1)
        lo, hi = float(arr.min()), float(arr.max())
        if lo < 0.0 or hi > max_dn:
            raise RawIspError(
                f"values outside [0, {max_dn:g}] for bit depth {self.bit_depth}:"
                f" min={lo:g} max={hi:g}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def max_dn(self) -> float:
        """Full-scale digital number, ``2**bit_depth - 1``."""
        return float(2**self.bit_depth - 1)


def _check_factor(d: int) -> None:
    if not isinstance(d, (int, np.integer)) or d < 1 or d % 2 == 0:
        raise RawIspError(f"downsampling factor must be an odd positive integer, got {d!r}")


def crop_to_factor(img: BayerImage, d: int) -> BayerImage:
    """Drop trailing rows/columns until both dimensions divide ``2*d``.

    The top-left corner is untouched, so the pattern phase is preserved.
    Raises if less than one ``2d x 2d`` patch would remain.
    """
    _check_factor(d)
    step = 2 * d
    new_h = img.height - img.height % step
    new_w = img.width - img.width % step
    if new_h < step or new_w < step:
        raise RawIspError(
            f"image {img.height}x{img.width} is smaller than one {step}x{step} patch after cropping"
        )
    if new_h == img.height and new_w == img.width:
        return img
    return BayerImage(img.data[:new_h, :new_w], img.pattern, img.bit_depth)


def downsample_bayer(
    img: BayerImage,
    d: int,
    crop_policy: CropPolicy = CropPolicy.CROP_TRAILING,
) -> BayerImage:
    """Pattern-preserving downsampling by an odd factor ``d`` per dimension.

    Each 2d x 2d input patch maps to one 2x2 output cell. Output element
    (i, j) of a cell is the mean of the ((d+1)/2)^2 same-color input sites at
    patch-local rows ``d*i + 2m`` and columns ``d*j + 2n`` for
    ``m, n in 0..(d-1)/2``. Same-parity indices keep every averaged site on
    the color of the output position, so the mosaic pattern survives.

    Outputs are real means and are not re-quantized. Under
    ``CropPolicy.REQUIRE_EXACT`` non-divisible dimensions raise instead of
    being cropped.
    """
    _check_factor(d)
    step = 2 * d
    if img.height % step or img.width % step:
        if crop_policy is CropPolicy.REQUIRE_EXACT:
            raise RawIspError(
                f"image {img.height}x{img.width} not divisible by {step} (factor {d});"
                " crop first or use CROP_TRAILING"
            )
        img = crop_to_factor(img, d)

    half = (d + 1) // 2
    n_avg = half * half
    out_h = img.height // d
    out_w = img.width // d
    data = img.data
    out = np.empty((out_h, out_w), dtype=np.float64)
    for i in (0, 1):
        for j in (0, 1):
            acc = np.zeros((out_h // 2, out_w // 2), dtype=np.float64)
            for m in range(half):
                for n in range(half):
                    acc += data[d * i + 2 * m :: step, d * j + 2 * n :: step]
            out[i::2, j::2] = acc / n_avg
    return BayerImage(out, img.pattern, img.bit_depth)


def channel_mask(img: BayerImage, channel: str) -> np.ndarray:
    """Binary H x W array marking the sites of one channel ('R', 'G' or 'B').

    Both green positions of the cell are set for 'G'.
    """
    if channel not in ("R", "G", "B"):
        raise RawIspError(f"channel must be 'R', 'G' or 'B', got {channel!r}")
    mask = np.zeros((img.height, img.width), dtype=np.uint8)
    for idx, letter in enumerate(img.pattern.value):
        if letter == channel:
            mask[idx // 2 :: 2, idx % 2 :: 2] = 1
    return mask


def normalize_to_unit(img: BayerImage) -> np.ndarray:
    """Scale digital numbers to [0, 1] by dividing by full scale."""
    return img.data / img.max_dn
