"""256-bin intensity histograms and the means derived from them.

Every threshold procedure in this library consumes a histogram rather than
re-scanning pixels, so the histogram is the sufficient statistic for all
derived values. Sums are accumulated in exact 64-bit integer arithmetic
with a single final division, which keeps results independent of pixel
order and bit-identical to a direct pass over the image.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import BinaryImage, GrayImage

__all__ = [
    "Histogram",
    "EmptyInputError",
    "build_histogram",
    "global_mean",
    "class_mean",
]

BIN_COUNT = 256


class EmptyInputError(ValueError):
    """Raised when a mean is requested over zero pixels."""


@dataclass(frozen=True, eq=False)
class Histogram:
    """Counts of pixels per intensity value: ``counts[v]`` pixels have value ``v``."""

    counts: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.counts)
        if arr.shape != (BIN_COUNT,):
            raise ValueError(f"histogram needs exactly {BIN_COUNT} bins, got shape {arr.shape}")
        if arr.dtype.kind not in "ui":
            raise ValueError(f"bin counts must be integers, got dtype {arr.dtype}")
        if arr.size and int(arr.min()) < 0:
            raise ValueError("bin counts must be non-negative")
        out = np.ascontiguousarray(arr, dtype=np.int64)
        if out is arr and arr.flags.writeable:
            out = arr.copy()
        out.setflags(write=False)
        object.__setattr__(self, "counts", out)

    @property
    def total(self) -> int:
        """Number of pixels counted, i.e. the sum over all 256 bins."""
        return int(self.counts.sum())

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.counts, other.counts)

    def __repr__(self) -> str:
        return f"Histogram(total={self.total})"


def build_histogram(image: GrayImage | BinaryImage) -> Histogram:
    """Count the exact multiplicity of every intensity in the image."""
    return Histogram(np.bincount(image.pixels.reshape(-1), minlength=BIN_COUNT))


def global_mean(hist: Histogram) -> float:
    """Arithmetic mean intensity over all counted pixels.

    Computed as an exact integer weighted sum divided once, so the result
    equals the pixelwise mean bit for bit.
    """
    total = hist.total
    if total == 0:
        raise EmptyInputError("cannot take the mean of an empty histogram")
    weighted = int(np.dot(np.arange(BIN_COUNT, dtype=np.int64), hist.counts))
    return weighted / total


def class_mean(hist: Histogram, lo: int, hi: int) -> float | None:
    """Mean intensity restricted to the class ``[lo, hi]`` inclusive.

    Returns ``None`` when no pixel falls inside the class; callers must
    treat the empty class explicitly rather than receive a fabricated
    number. Raises ``ValueError`` when the bounds are not
    ``0 <= lo <= hi <= 255``.
    """
    if not (0 <= lo <= hi <= BIN_COUNT - 1):
        raise ValueError(f"class bounds must satisfy 0 <= lo <= hi <= 255, got [{lo}, {hi}]")
    counts = hist.counts[lo : hi + 1]
    size = int(counts.sum())
    if size == 0:
        return None
    weighted = int(np.dot(np.arange(lo, hi + 1, dtype=np.int64), counts))
    return weighted / size
