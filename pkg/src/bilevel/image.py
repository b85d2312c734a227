"""Immutable 8-bit image buffers shared by the whole library.

Pixels are stored as a read-only ``(height, width)`` uint8 array in
row-major order. ``GrayImage`` carries arbitrary intensities in [0, 255];
``BinaryImage`` is constrained to the two levels 0 and 255.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = ["GrayImage", "BinaryImage"]

BINARY_LEVELS = (0, 255)


def _validated_pixels(pixels, binary: bool) -> np.ndarray:
    arr = np.asarray(pixels)
    if arr.ndim != 2:
        raise ValueError(f"pixel buffer must be 2-D (height x width), got shape {arr.shape}")
    height, width = arr.shape
    if height < 1 or width < 1:
        raise ValueError(f"image dimensions must be at least 1x1, got {width}x{height}")
    if arr.dtype.kind not in "ui":
        raise ValueError(f"pixel values must be integers, got dtype {arr.dtype}")
    lo, hi = int(arr.min()), int(arr.max())
    if lo < 0 or hi > 255:
        raise ValueError(f"pixel values must lie in [0, 255], found range [{lo}, {hi}]")
    if binary and not np.isin(arr, BINARY_LEVELS).all():
        bad = int(arr[~np.isin(arr, BINARY_LEVELS)][0])
        raise ValueError(f"binary image may contain only 0 and 255, found {bad}")
    out = np.ascontiguousarray(arr, dtype=np.uint8)
    if out is arr and arr.flags.writeable:
        out = arr.copy()  # never alias a caller-writable buffer
    out.setflags(write=False)
    return out


def _reshape_flat(width: int, height: int, values: Sequence[int]) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1 or arr.size != width * height:
        raise ValueError(
            f"pixels length must equal width x height = {width * height}, got {arr.size}"
        )
    return arr.reshape(height, width)


@dataclass(frozen=True, eq=False)
class GrayImage:
    """A width x height grid of 8-bit intensity values."""

    pixels: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "pixels", _validated_pixels(self.pixels, binary=False))

    @classmethod
    def from_flat(cls, width: int, height: int, values: Sequence[int]) -> "GrayImage":
        """Build an image from a row-major flat sequence of intensities."""
        return cls(_reshape_flat(width, height, values))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return f"GrayImage(width={self.width}, height={self.height})"


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """A width x height grid whose pixels are exactly 0 (background) or 255 (foreground)."""

    pixels: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "pixels", _validated_pixels(self.pixels, binary=True))

    @classmethod
    def from_flat(cls, width: int, height: int, values: Sequence[int]) -> "BinaryImage":
        """Build a binary image from a row-major flat sequence of 0/255 values."""
        return cls(_reshape_flat(width, height, values))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def to_gray(self) -> GrayImage:
        """View the two-level buffer as an ordinary grayscale image."""
        return GrayImage(self.pixels)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __repr__(self) -> str:
        return f"BinaryImage(width={self.width}, height={self.height})"
