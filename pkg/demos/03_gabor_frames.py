"""Gabor frames: frame operators, bounds, dual windows, Janssen form.

Builds single- and multi-window Gabor systems on Z_6, inspects their frame
operators and optimal bounds, reconstructs a signal with dual windows, and
checks the Janssen representation over the adjoint lattice.
"""

import numpy as np

from heisenmod import (
    FiniteAbelianGroup,
    GaborSystem,
    adjoint_subgroup,
    delta_window,
    dual_window,
    frame_bounds,
    frame_operator,
    is_frame,
    janssen_frame_operator,
    randn_window,
    reconstruction_residual,
    spectrum,
    subgroup_from_generators,
)

g = FiniteAbelianGroup((6,))
lat = subgroup_from_generators(g, [((2,), (0,)), ((0,), (3,))], 1)
print(f"lattice 2Z x 3Z^ in Z_6: {len(lat)} points, size {lat.size}")

# One random window over this lattice already gives a frame whenever its
# orbit spans C^6; check the bounds.
eta = randn_window(g, seed=1)
sys1 = GaborSystem(lat, (eta,))
b = frame_bounds(sys1)
print(f"\nsingle random window: A = {b.lower:.4f}, B = {b.upper:.4f}, "
      f"frame = {is_frame(sys1)}")
print(f"frame operator spectrum: {np.round(spectrum(sys1), 4)}")

# A thin lattice cannot support a single-window frame.
thin = subgroup_from_generators(g, [((3,), (3,))], 1)
sys_thin = GaborSystem(thin, (eta,))
print(f"\nlattice <(3,3)> has {len(thin)} points; "
      f"frame = {is_frame(sys_thin)} (too few shifts)")

# Two delta windows on the same thin lattice still fail; six do not.
multi = GaborSystem(thin, tuple(delta_window(g, j) for j in range(6)))
print(f"six delta windows on <(3,3)>: frame = {is_frame(multi)}")

# Dual windows solve S gamma = eta and give perfect reconstruction.
duals = dual_window(sys1)
xi = randn_window(g, seed=7)
res = reconstruction_residual(sys1, duals, xi)
print(f"\nreconstruction residual with the canonical dual: {res:.2e}")

# Janssen: the frame operator rewritten as a sum over the adjoint lattice.
adj = adjoint_subgroup(lat)
jans = janssen_frame_operator(eta, lat)
direct = frame_operator(sys1)
print(f"\nadjoint lattice has {len(adj)} points")
print(f"Janssen form vs direct frame operator, entrywise gap: "
      f"{np.max(np.abs(jans - direct)):.2e}")

# A tight fixture: two deltas on 2Z x 2Z^ in Z_4 give S = 2I.
g4 = FiniteAbelianGroup((4,))
lat4 = subgroup_from_generators(g4, [((2,), (0,)), ((0,), (2,))], 1)
tight = GaborSystem(lat4, (delta_window(g4, 0), delta_window(g4, 1)))
print(f"\ntight system on Z_4: bounds = {frame_bounds(tight)}")
print(f"its dual windows are the originals scaled by 1/2: "
      f"{np.round(dual_window(tight)[0].values.real, 4)}")
