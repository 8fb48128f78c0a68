"""Scene-linear HDR handling: transfer curves, outlier clipping, statistics.

Renders live in scene-linear space with a long-tailed value distribution;
fireflies push single pixels into the hundreds. The pipeline clips those at
100 before training, reports value statistics histogram-style, and converts
to sRGB for display with either the piecewise transfer curve or a plain clamp.
"""

import numpy as np

from mchsr.colorspace import clamp_to_srgb, clip_outliers, depth_visualize, linear_to_srgb
from mchsr.data import pixel_histogram
from mchsr.tensor import Tensor

# The two conversion rules side by side.
samples = np.array([-0.5, 0.0, 0.002, 0.0031308, 0.18, 0.5, 0.9, 1.0, 3.0])
print(f"{'linear':>10s} {'piecewise':>10s} {'clamp':>10s}")
for l in samples:
    print(f"{l:10.5f} {linear_to_srgb(l):10.6f} {clamp_to_srgb(l):10.6f}")

# A long-tailed synthetic exposure with a few fireflies.
rng = np.random.default_rng(3)
img = rng.exponential(0.8, (1, 3, 64, 64)).astype(np.float32)
fireflies = rng.integers(0, img.size, 5)
img.ravel()[fireflies] = rng.uniform(150, 900, 5)
img = Tensor(img)

stats = pixel_histogram([img], [0, 1, 2, 5, 10, 50, 100, 200])
print("\npixel statistics before clipping:")
print(stats)

clipped = clip_outliers(img)
print(f"\nafter clip at 100: max value {clipped.data.max():.1f} "
      f"(was {img.data.max():.1f})")

# Depth buffers are displayed as 1 / (d + 1e-5) so near geometry reads bright.
depth = Tensor(np.abs(rng.normal(2.0, 1.0, (1, 1, 8, 8))).astype(np.float32))
vis = depth_visualize(depth)
print(f"\ndepth range [{depth.data.min():.2f}, {depth.data.max():.2f}] maps to "
      f"display range [{vis.data.min():.3f}, {vis.data.max():.3f}]")
