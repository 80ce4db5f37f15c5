"""
Odd Lagrangians in split quadratic spaces over GF(2)
====================================================

The space is F_2^(2n) with the split quadratic form Q(a, b) = a . b.
An odd Lagrangian is a maximal totally isotropic subspace of the bilinear
form on which Q is not identically zero.  The subgroup of the orthogonal
group fixing the left half pointwise acts on them; the overlap dimension
with the left half is a complete orbit invariant, certified below by
explicit witness isometries.
"""

from vftk import (
    enumerate_odd_lagrangians,
    left_overlap,
    orbit_census,
    same_orbit_witness,
    stabilizer_structure,
    standard_odd_lagrangian,
)

for n in range(1, 6):
    rows = orbit_census(n)
    total = sum(r.size for r in rows)
    sizes = " + ".join(str(r.size) for r in rows)
    print(f"n={n}: {total} odd Lagrangians = {sizes}")
print()

# each orbit is named by its overlap j with the left half; the stabilizer
# of a member factors as a 2-group extension of a product of linear groups
n = 5
for row in orbit_census(n):
    print(
        f"  overlap {row.overlap}: orbit size {row.size:>5},"
        f" stabilizer {row.stabilizer_order:>9}"
        f" = {row.unipotent_order} . ({row.levi})"
    )
print()

# a same-orbit claim comes with an explicit isometry; a different-orbit
# claim is refuted by the invariant
members = enumerate_odd_lagrangians(3)
a = standard_odd_lagrangian(3, 1)
b = next(m for m in members if left_overlap(3, m) == 1 and m != a)
w = same_orbit_witness(3, a, b)
print(f"witness matrix carrying one overlap-1 member to another: {w.matrix}")

c = standard_odd_lagrangian(3, 2)
refuted = same_orbit_witness(3, a, c)
print(f"overlap-1 vs overlap-2: witness is {refuted.matrix}, overlaps {refuted.overlaps}")

info = stabilizer_structure(3, a)
print(f"stabilizer of the overlap-1 member at n=3: order {info.order}, levi {info.levi}")
