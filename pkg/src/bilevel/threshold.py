"""Global threshold selection and the binarization rule.

Two selection procedures are provided. ``mean_threshold`` takes the global
intensity mean as the threshold directly. ``iterative_optimum_threshold``
starts from that mean and repeatedly replaces the threshold with the
average of the two class means (pixels at or below the threshold versus
pixels above it) until it moves by less than one gray level; this is the
classic iterative-selection scheme. ``fixed_point_oracle`` validates the
latter by exhaustively scanning every integer split instead of iterating.

A pixel equal to the threshold goes to the background class, so a
real-valued threshold splits classes at ``floor(T)``: class one is
``[0, floor(T)]``, class two is ``[floor(T) + 1, 255]``. The iterative
procedure walks integer thresholds (each candidate is floored before its
classes are formed), which pins every convergence point to within one gray
level of an integer fixed point and keeps both classes non-empty for any
image with two or more distinct intensities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .histogram import Histogram, build_histogram, class_mean, global_mean
from .image import BinaryImage, GrayImage

__all__ = [
    "ITERATION_CAP",
    "IterationStep",
    "ThresholdResult",
    "ConvergenceError",
    "binarize",
    "mean_threshold",
    "iterative_optimum_threshold",
    "fixed_point_oracle",
]

METHOD_MEAN = "mean"
METHOD_ITERATIVE = "iterative"

# Each step's class split is determined by floor(T), so at most 256 distinct
# partitions exist and the procedure settles long before this cap.
ITERATION_CAP = 256


@dataclass(frozen=True)
class IterationStep:
    """One refinement step: the threshold entering the step and the derived means.

    ``m1``/``m2`` are the class means at or below / above the threshold;
    either is ``None`` when its class holds no pixels, in which case
    ``total_mean`` is ``None`` as well and iteration stops.
    """

    estimate: float
    m1: float | None
    m2: float | None
    total_mean: float | None


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of one selection procedure.

    ``estimate`` is the starting threshold (the global mean for both
    methods), ``optimum`` the selected one. ``degenerate`` marks runs cut
    short by an empty class, e.g. on a constant image.
    """

    method: str
    estimate: float
    optimum: float
    iterations: tuple[IterationStep, ...]
    converged: bool
    degenerate: bool


class ConvergenceError(RuntimeError):
    """Iteration cap exceeded; carries the recorded trace for diagnosis."""

    def __init__(self, message: str, steps: tuple[IterationStep, ...]):
        super().__init__(message)
        self.steps = tuple(steps)


def binarize(image: GrayImage, threshold: float) -> BinaryImage:
    """Map pixels above the threshold to 255 and all others to 0."""
    t = float(threshold)
    if not (0.0 <= t <= 255.0):
        raise ValueError(f"threshold must lie in [0, 255], got {threshold!r}")
    return BinaryImage(np.where(image.pixels > t, 255, 0).astype(np.uint8))


def mean_threshold(image: GrayImage) -> ThresholdResult:
    """Select the global intensity mean as the threshold.

    Pairing the result with :func:`binarize` sends every pixel at or below
    the mean to 0 and the rest to 255.
    """
    mean = global_mean(build_histogram(image))
    return ThresholdResult(
        method=METHOD_MEAN,
        estimate=mean,
        optimum=mean,
        iterations=(),
        converged=True,
        degenerate=False,
    )


def iterative_optimum_threshold(image: GrayImage) -> ThresholdResult:
    """Refine the global mean by averaging the two class means to a fixed point.

    Starting from the global mean, each step splits the histogram at the
    current integer threshold T, computes the mean m1 of pixels in
    ``[0, T]`` and the mean m2 of pixels in ``[T + 1, 255]``, and moves T
    to ``floor((m1 + m2) / 2)``. Iteration converges when the class-mean
    average lands within one gray level of T; the returned optimum is that
    real-valued average. If either class is empty the run terminates
    degenerate at the current T. The full step trace is recorded on the
    result.
    """
    hist = build_histogram(image)
    estimate = global_mean(hist)
    steps: list[IterationStep] = []
    # An integer threshold makes the stopping test |T - total_mean| < 1 a
    # certificate that T is one of the fixed points fixed_point_oracle
    # reports, so the two routes can never drift apart.
    current = math.floor(estimate)
    for _ in range(ITERATION_CAP):
        m1 = class_mean(hist, 0, current)
        m2 = class_mean(hist, current + 1, 255) if current < 255 else None
        if m1 is None or m2 is None:
            steps.append(IterationStep(float(current), m1, m2, None))
            return ThresholdResult(
                method=METHOD_ITERATIVE,
                estimate=estimate,
                optimum=float(current),
                iterations=tuple(steps),
                converged=False,
                degenerate=True,
            )
        total_mean = (m1 + m2) / 2.0
        steps.append(IterationStep(float(current), m1, m2, total_mean))
        if abs(current - total_mean) < 1.0:
            return ThresholdResult(
                method=METHOD_ITERATIVE,
                estimate=estimate,
                optimum=total_mean,
                iterations=tuple(steps),
                converged=True,
                degenerate=False,
            )
        current = math.floor(total_mean)
    raise ConvergenceError(
        f"threshold did not settle within {ITERATION_CAP} iterations", tuple(steps)
    )


def fixed_point_oracle(hist: Histogram) -> set[int]:
    """Every integer threshold the iterative update maps to within 1 of itself.

    Scans all 256 splits with two non-empty classes using prefix sums; no
    iteration is involved, so the result is an independent check on
    :func:`iterative_optimum_threshold`.
    """
    counts = hist.counts
    values = np.arange(256, dtype=np.int64)
    n_lo = np.cumsum(counts)
    w_lo = np.cumsum(values * counts)
    n_hi = n_lo[-1] - n_lo
    w_hi = w_lo[-1] - w_lo
    valid = (n_lo > 0) & (n_hi > 0)
    if not valid.any():
        return set()
    t = values[valid].astype(np.float64)
    midpoint = (w_lo[valid] / n_lo[valid] + w_hi[valid] / n_hi[valid]) / 2.0
    return {int(v) for v in values[valid][np.abs(t - midpoint) < 1.0]}
