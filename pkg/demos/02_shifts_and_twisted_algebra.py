"""Time-frequency shifts and the twisted convolution algebra.

Shows the projective relation pi(z) pi(w) = c(z, w) pi(z + w), then builds
the twisted algebra on a lattice: products of point masses, the involution,
the trace, and the faithful integrated representation with its C*-norm.
"""

import numpy as np

from heisenmod import (
    FiniteAbelianGroup,
    TFPoint,
    cstar_norm,
    delta_seq,
    delta_window,
    full_plane,
    heisenberg_cocycle,
    integrated_rep,
    involution,
    subgroup_from_generators,
    tf_shift,
    tf_shift_matrix,
    trace,
    twisted_convolve,
    unit_seq,
)

g = FiniteAbelianGroup((4,))

# A shift acts by translating then modulating.
spike = delta_window(g, 0)
z = TFPoint((1,), (1,))
print(f"pi((1,1)) delta_0 on Z_4 = {np.round(tf_shift(z, spike).values, 6)}")

# Composing two shifts picks up a cocycle phase.
w = TFPoint((0,), (1,))
c = heisenberg_cocycle(g, z, w)
lhs = tf_shift_matrix(g, z) @ tf_shift_matrix(g, w)
rhs = c * tf_shift_matrix(g, g.tf_add(z, w))
print(f"cocycle c(z, w) = {c:.4f}, projective relation gap = "
      f"{np.max(np.abs(lhs - rhs)):.2e}")

# The twisted algebra on the full plane with counting weight.
dom = full_plane(g, 1)
a = delta_seq(dom, TFPoint((1,), (0,)))
b = delta_seq(dom, TFPoint((0,), (1,)))
ab = twisted_convolve(a, b)
ba = twisted_convolve(b, a)
target = g.tf_add(TFPoint((1,), (0,)), TFPoint((0,), (1,)))
print(f"\ndelta_(1,0) * delta_(0,1) at (1,1): {ab.at(target):.4f}")
print(f"delta_(0,1) * delta_(1,0) at (1,1): {ba.at(target):.4f}  (noncommutative)")

# Involution sends a point mass to a phase times the mass at the inverse.
star = involution(a)
print(f"\n(delta_(1,0))^* is supported at (3,0) with value {star.at(TFPoint((3,), (0,))):.4f}")

# The unit has trace 1/weight; the trace picks out the coefficient at zero.
e = unit_seq(dom)
print(f"trace of the unit = {trace(e):.4f}")
print(f"trace of delta_(1,0) = {trace(a):.4f}")

# Positivity: a * a^* has positive trace, and the representation is faithful.
pos = trace(twisted_convolve(a, involution(a)))
print(f"trace(a a^*) = {pos:.4f} > 0")
print(f"C*-norm of delta_(1,0) = {cstar_norm(a):.4f}  (a unitary element)")

# The integrated representation of a lattice algebra element is a matrix sum.
lat = subgroup_from_generators(g, [((2,), (0,)), ((0,), (2,))], 1)
seq = delta_seq(lat, TFPoint((2,), (0,)))
print(f"\nintegrated representation of delta_(2,0) on 2Z x 2Z^:")
print(np.round(integrated_rep(seq).real, 6))
