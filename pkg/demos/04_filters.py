#!/usr/bin/env python3
"""Filters and pair convergence on a finite carrier.

Every filter here is principal, so a filter is just its core; a
filterbase is any directed family of nonempty sets.  A filter converges
to a point when its core fits in every enlarged selector-open
neighbourhood, and accumulates there when the point sits in the
pair-closure of every member.
"""

from topolab import (
    Filter,
    OpPair,
    accumulates,
    adherence_set,
    catalog,
    convergence_closure,
    converges,
    discrete,
    finer_convergent,
    generated_filter,
    is_filterbase,
    is_t2,
    limit_set,
    maximal_filters,
    pair_closure,
    sierpinski,
)

s2 = sierpinski()
ops = catalog(s2)
theta = OpPair(ops["int"], ops["cl"])
plain = OpPair(ops["int"], ops["identity"])


def show(mask):
    return "{" + ",".join(s2.ground.labels_of_mask(mask)) + "}"


# --- convergence depends on the pair ----------------------------------------
at_a = Filter(2, 0b01)
print("filter at {a}, theta pair: limits =", show(limit_set(at_a, theta)))
# closure blurs the two points together, so the filter theta-converges to both
print("filter at {a}, plain pair: limits =", show(limit_set(at_a, plain)))

# --- accumulation is the closure-side notion ---------------------------------
at_b = Filter(2, 0b10)
print("\nfilter at {b} theta-accumulates to a:", accumulates(at_b, theta, 0))
print("adherence set:", show(adherence_set(at_b, theta)))
print("limits are always adherent:",
      limit_set(at_b, theta) & ~adherence_set(at_b, theta) == 0)

# --- filterbases generate principal filters ----------------------------------
base = (0b11, 0b01)
print("\nbase {X, {a}} is a filterbase:", is_filterbase(base))
f = generated_filter(2, base)
print("generated core:", show(f.core))
print("base predicates equal the filter's:",
      all(converges(base, theta, x) == converges(f, theta, x) for x in range(2)))

# --- refining an accumulating filter into a convergent one --------------------
g = finer_convergent(Filter(2, 0b11), theta, 0)
print("\nrefinement of the indiscrete filter toward a:", show(g.core),
      "converges:", converges(g, theta, 0))

# --- maximal filters and separation -------------------------------------------
print("\nmaximal filters sit at singletons:",
      [show(m.core) for m in maximal_filters(s2)])
d2 = discrete(2)
hausdorff = OpPair(catalog(d2)["int"], catalog(d2)["identity"])
print("discrete two points separated:", is_t2(hausdorff))
print("Sierpinski not separated:", is_t2(plain))

# --- the convergence closure rebuilds the pair closure under regularity -------
agree = all(
    convergence_closure(theta, a) == pair_closure(theta, a) for a in s2.subsets()
)
print("\nconvergence closure equals pair closure for the theta pair:", agree)
