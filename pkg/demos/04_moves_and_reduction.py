#!/usr/bin/env python3
"""Walkthrough: Hurwitz moves, (de)stabilization, and reduction chains.

Hurwitz moves reorder the cycle sequence while conjugating a neighbor; the
ordered product of signed twist matrices never changes.  Stabilization adds
a cancelling handle pair; destabilization recognizes one and removes it.
Both leave the total space alone.
"""

from lefschetz import (
    destabilize,
    hurwitz_move,
    reduce,
    stabilize,
    total_space_invariants,
    twist_product,
    u_11,
    u_g1,
)

f = u_g1(2)
print("start:", [c.curve.label for c in f.cycles], "signs", f.signs())

product = twist_product(f)
g = hurwitz_move(f, 1, "R")
g = hurwitz_move(g, 3, "L")
print("after two moves the cycle order changed:",
      [c.curve.label for c in g.cycles])
print("but the twist product is unchanged:", twist_product(g) == product)
print("and moves undo exactly:", hurwitz_move(hurwitz_move(f, 2, "R"), 2, "L") == f)

# Stabilize and undo.
s = stabilize(u_11(), "boundary_up", sign=1)
print("\nstabilized fiber:", s.fiber, "- new cycle", s.cycles[-1].curve.cls)
print("matching destabilization restores the start:",
      destabilize(s, s.fiber.rank - 1) == u_11())

# Reduction chains: u_11 collapses to a fibration with disk fiber and no
# cycles; the higher-genus family terminates at a three-holed sphere with
# three boundary-parallel cycles, two negative and one positive.
r = reduce(u_11())
print("\nreduce(u_11):", r.fibration.fiber, "cycles", r.fibration.size,
      "in", r.steps, "steps")
for genus in (2, 3, 4, 5):
    start = u_g1(genus)
    r = reduce(start)
    t = r.fibration
    same = total_space_invariants(t).euler == total_space_invariants(start).euler
    print(f"reduce(u_g1({genus})): {t.fiber}, {t.size} cycles, "
          f"signs {sorted(t.signs())}, euler preserved: {same}")
