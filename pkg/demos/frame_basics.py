"""Tour of sampled frames: spaces, bounds, duals, reconstruction.

Run with: python demos/frame_basics.py
"""

import numpy as np

from contframes import (
    MeasureSpace,
    SampledFrame,
    analysis,
    canonical_dual,
    counting_space,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    is_riesz_type,
    synthesis,
    tight_from_partition,
)

rng = np.random.default_rng(2024)

print("== a random frame on a weighted 24-point space ==")
space = MeasureSpace(np.arange(24.0)[:, None], rng.uniform(0.2, 2.0, 24))
F = SampledFrame(space, rng.standard_normal((5, 24)) + 1j * rng.standard_normal((5, 24)))
bounds = frame_bounds(F)
print(f"optimal bounds: A = {bounds.lower:.4f}, B = {bounds.upper:.4f}, "
      f"frame = {bounds.is_frame}")

print("\n== the frame operator is the composition of synthesis and analysis ==")
S = frame_operator(F)
composed = np.column_stack([synthesis(F, analysis(F, e)) for e in np.eye(5)])
print(f"factorization defect: {np.linalg.norm(S - composed, 2):.2e}")

print("\n== reconstruction through the canonical dual ==")
dual = canonical_dual(F)
print(f"dual pair defect passes at 1e-10: {is_dual_pair(F, dual, 1e-10)}")
f = rng.standard_normal(5) + 1j * rng.standard_normal(5)
rec = synthesis(dual, analysis(F, f))
print(f"reconstruction error for a random vector: "
      f"{np.linalg.norm(rec - f) / np.linalg.norm(f):.2e}")
dual_bounds = frame_bounds(dual)
print(f"dual bounds are reciprocals: 1/B = {1 / bounds.upper:.4f} vs "
      f"{dual_bounds.lower:.4f}, 1/A = {1 / bounds.lower:.4f} vs {dual_bounds.upper:.4f}")

print("\n== tight frames from any partition of any space ==")
tight = tight_from_partition(space, 5)
tb = frame_bounds(tight)
print(f"partition construction gives A = {tb.lower:.12f}, B = {tb.upper:.12f}")

print("\n== unique duals need as many dimensions as points ==")
square = SampledFrame(counting_space(4),
                      rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
print(f"square invertible system is Riesz-type: {is_riesz_type(square)}")
print(f"overcomplete frame is not: {is_riesz_type(F)}")
