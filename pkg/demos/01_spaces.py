#!/usr/bin/env python3
"""Tour of finite spaces: construction, enumeration, interior and closure.

Subsets are plain ints: point i is bit i.  A topology is just a ground
set plus a family of open masks closed under union and intersection.
"""

from topolab import (
    build_topology,
    chain3,
    default_ground,
    enumerate_topologies,
    random_topology,
    sierpinski,
)


def show(top, mask):
    return "{" + ",".join(top.ground.labels_of_mask(mask)) + "}"


# --- build a topology from any seed family -------------------------------
g = default_ground(3)
top = build_topology(g, [0b011, 0b110])  # {a,b} and {b,c}
print("generated opens:", [show(top, m) for m in top.opens])
# the intersection {b} and the union X were forced in

# --- the two-point workhorse ---------------------------------------------
s2 = sierpinski()
print("\nSierpinski opens:", [show(s2, m) for m in s2.opens])
print("interior of {b}:", show(s2, s2.interior(0b10)), "(no open fits inside)")
print("closure of {a}:", show(s2, s2.closure(0b01)), "(meets every neighbourhood of b)")

c3 = chain3()
print("\nchain space closure of {b}:", show(c3, c3.closure(0b010)))

# --- exhaustive enumeration up to four points ----------------------------
print("\ntopologies on n points:")
for n in range(5):
    print(f"  n={n}: {sum(1 for _ in enumerate_topologies(n))}")
# 1, 1, 4, 29, 355: one topology per preorder on the points

# --- seeded random spaces for larger carriers ----------------------------
big = random_topology(8, seed=2024, subbasis_size=5)
print(f"\nrandom 8-point space: {len(big.opens)} opens, deterministic in the seed")
assert big == random_topology(8, seed=2024, subbasis_size=5)
