"""Groups, characters, plane lattices, and adjoint lattices.

Walks through the basic objects: a finite abelian group, its character
pairing, measured subgroups of the time-frequency plane, and the adjoint
lattice with its reciprocal weight.
"""

from fractions import Fraction

from heisenmod import (
    FiniteAbelianGroup,
    adjoint_subgroup,
    all_subgroups,
    character,
    full_plane,
    subgroup_from_generators,
)

g = FiniteAbelianGroup((12,))
print(f"ambient group Z_12, order {g.order}")
print(f"plane has {len(g.tf_points())} time-frequency points")

# The character pairing takes values in the unit circle.
val = character(g, (3,), (2,))
print(f"<3, 2> on Z_12 = {val:.4f}  (exp(2 pi i * 6/12) = -1)")

# A separable lattice: translations by 2Z, modulations by 3Z.
lat = subgroup_from_generators(g, [((2,), (0,)), ((0,), (3,))], 1)
print(f"\nlattice 2Z x 3Z^: {len(lat)} points, weight {lat.weight}, size {lat.size}")

# The adjoint lattice consists of the points whose shifts commute with all
# lattice shifts. Its weight is the reciprocal of the lattice size.
adj = adjoint_subgroup(lat)
print(f"adjoint lattice: {len(adj)} points, weight {adj.weight}")
print(f"|lattice| * |adjoint| = {len(lat) * len(adj)} = |G|^2 = {g.order ** 2}")

back = adjoint_subgroup(adj.with_weight(1))
print(f"adjoint of adjoint recovers the lattice: {back.elements == lat.elements}")

# A non-separable lattice: the diagonal.
diag = subgroup_from_generators(g, [((1,), (1,))], 1)
adj_diag = adjoint_subgroup(diag)
print(f"\ndiagonal lattice <(1,1)>: {len(diag)} points, size {diag.size}")
print(f"its adjoint equals itself: {adj_diag.elements == diag.elements}")

# Plancherel weight on the full plane makes it its own unit-size lattice.
plane = full_plane(g, Fraction(1, 12))
print(f"\nfull plane with weight 1/12: size {plane.size}")

# Every subgroup of the plane can be enumerated for small groups.
g4 = FiniteAbelianGroup((4,))
subs = all_subgroups(g4)
print(f"\nthe plane of Z_4 has {len(subs)} subgroups")
by_card = {}
for elems in subs:
    by_card[len(elems)] = by_card.get(len(elems), 0) + 1
for card in sorted(by_card):
    print(f"  cardinality {card:2d}: {by_card[card]} subgroup(s)")
