"""
Histograms and the means behind every threshold
===============================================

All threshold selection in this library runs on the 256-bin intensity
histogram, never on raw pixel scans. This script builds a histogram for a
noisy two-cluster image and pulls out the global and per-class means that
the selection procedures consume.
"""

import numpy as np

from bilevel import GrayImage, build_histogram, class_mean, global_mean

rng = np.random.default_rng(7)

# Two intensity populations, like ink and paper in a document scan:
# 70% background near 170, 30% foreground near 60.
height, width = 48, 64
foreground = rng.random((height, width)) < 0.3
pixels = np.where(foreground, 60.0, 170.0) + rng.normal(0, 12, (height, width))
image = GrayImage(np.clip(np.rint(pixels), 0, 255).astype(np.uint8))

hist = build_histogram(image)
print(f"{image} -> {hist}")
assert hist.total == image.width * image.height  # every pixel lands in a bin

# A coarse view of the two modes: counts bucketed by 32-value bands.
for band_start in range(0, 256, 32):
    count = int(hist.counts[band_start : band_start + 32].sum())
    bar = "#" * (count * 60 // hist.total)
    print(f"  [{band_start:3d}..{band_start + 31:3d}] {count:5d} {bar}")

mean = global_mean(hist)
print(f"\nglobal mean intensity: {mean:.3f}")

# Class means on either side of the global mean: these are the m1/m2 the
# iterative procedure averages.
split = int(mean)
m1 = class_mean(hist, 0, split)
m2 = class_mean(hist, split + 1, 255)
print(f"mean of pixels <= {split}: {m1:.3f}")
print(f"mean of pixels >  {split}: {m2:.3f}")
print(f"average of the class means: {(m1 + m2) / 2:.3f}")

# An empty class is reported as None, never as a made-up number.
print(f"mean over an empty band [250, 255]: {class_mean(hist, 250, 255)}")
