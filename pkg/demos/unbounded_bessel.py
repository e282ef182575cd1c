"""Bounded Bessel constant with unbounded vector norms, and stable perturbation.

Run with: python demos/unbounded_bessel.py
"""

import math

import numpy as np

from contframes import (
    frame_bounds,
    norm_bound,
    perturb,
    scaled_singleton,
    tight_from_partition,
    unbounded_amplitude,
    uniform_grid_1d,
)

h = np.array([1.0, 1.0j, 0.5], dtype=complex)
hsq = float(np.linalg.norm(h) ** 2)

print("== rank-one family x -> a(x) h with square-integrable unbounded a ==")
print("grid n    largest ||F(x)||    Bessel bound B    cap ||h||^2 * quad(a^2)")
for n in (100, 1000, 10000):
    grid = uniform_grid_1d(0.0, 1.0, n)
    family = scaled_singleton(grid, h)
    quad = float(np.sum(grid.weights * unbounded_amplitude(grid.points[:, 0]) ** 2))
    print(f"{n:>6}    {norm_bound(family):16.4f}    "
          f"{frame_bounds(family).upper:14.4f}    {hsq * quad:14.4f}")
print("the vector norms blow up like n^(1/4) while B stays capped")

print("\n== adding a small multiple to a frame keeps the frame property ==")
grid = uniform_grid_1d(0.0, 1.0, 300)
base = tight_from_partition(grid, 3)  # tight frame, bounds (1, 1)
rank_one = scaled_singleton(grid, np.array([1.0, 0.0, 0.0], dtype=complex))
bf = frame_bounds(rank_one).upper
eps = 0.5 * math.sqrt(1.0 / bf)
combined = perturb(base, rank_one, eps)
bounds = frame_bounds(combined)
floor = (1.0 - eps * math.sqrt(bf)) ** 2
cap = 2.0 * (1.0 + eps**2 * bf)
print(f"eps = {eps:.4f}: bounds A = {bounds.lower:.4f} >= floor {floor:.4f}, "
      f"B = {bounds.upper:.4f} <= cap {cap:.4f}")
print(f"largest vector norm grew from {norm_bound(base):.4f} to "
      f"{norm_bound(combined):.4f}")
