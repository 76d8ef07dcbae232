#!/usr/bin/env python3
"""The operation catalog: expansion maps on subsets and their order.

An operation maps every subset somewhere above its interior and fixes
the empty set.  Everything is tabulated, so questions about operations
are finite scans.
"""

from topolab import (
    catalog,
    dual,
    is_monotone,
    is_regular_wrt,
    leq,
    op_open_family,
    sierpinski,
)

s2 = sierpinski()
ops = catalog(s2)


def show(mask):
    return "{" + ",".join(s2.ground.labels_of_mask(mask)) + "}"


# --- seven builtins --------------------------------------------------------
print("tables on the Sierpinski space (subsets {}, {a}, {b}, {a,b}):")
for name, op in ops.items():
    print(f"  {name:9s}", [show(v) for v in op.table])

# --- duality ---------------------------------------------------------------
print("\ndual(int) is cl:", dual(ops["int"]).table == ops["cl"].table)
print("dual(scl) is sint:", dual(ops["scl"]).table == ops["sint"].table)
print("double dual returns the original:",
      dual(dual(ops["cloint"])).table == ops["cloint"].table)

# --- the pointwise order ----------------------------------------------------
print("\nint <= cloint <= cl:",
      leq(ops["int"], ops["cloint"]) and leq(ops["cloint"], ops["cl"]))
print("identity <= scl <= cl:",
      leq(ops["identity"], ops["scl"]) and leq(ops["scl"], ops["cl"]))

# --- operation-open families ------------------------------------------------
print("\ncloint-open sets (the semi-open sets):",
      [show(m) for m in op_open_family(ops["cloint"])])
print("introcl-open sets (the pre-open sets):",
      [show(m) for m in op_open_family(ops["introcl"])])
print("identity-open sets: the whole power set,",
      len(op_open_family(ops["identity"])), "subsets")

# --- monotonicity and regularity --------------------------------------------
print("\nall builtins monotone here:",
      all(is_monotone(op) for op in ops.values()))
print("cl regular over the opens:", is_regular_wrt(ops["cl"], s2.opens))

# order forces open-family inclusion, but equal families do not force order:
same_family = op_open_family(ops["cloint"]) == op_open_family(ops["sint"])
no_order = not leq(ops["cloint"], ops["sint"]) and not leq(ops["identity"], ops["sint"])
print("equal open families without any order between the maps:",
      same_family and no_order)
