#!/usr/bin/env python3
"""Walkthrough: monodromy data of the standard fibrations and their total spaces.

Over a disk, a fibration's total space is (disk x fiber) plus one 2-handle
per vanishing cycle, so Euler characteristic and homology fall out of exact
integer linear algebra on the cycle classes.
"""

from lefschetz import build, total_space_invariants, u_10, u_11, u_g1, p_g

for name, f in [
    ("u_11", u_11()),
    ("u_g1(2)", u_g1(2)),
    ("u_g1(3)", u_g1(3)),
    ("u_10", u_10()),
    ("p_g(1)", p_g(1)),
    ("p_g(2)", p_g(2)),
]:
    r = total_space_invariants(f)
    cycles = ", ".join(
        f"{c.curve.label}{'+' if c.sign > 0 else '-'}" for c in f.cycles
    )
    print(f"{name}: fiber {f.fiber}, cycles ({cycles})")
    print(
        f"   euler {r.euler}, H1 free rank {r.h1_free_rank}, "
        f"torsion {list(r.h1_torsion)}, H2 rank {r.h2_rank}"
    )

# Spot the familiar spaces: u_11 has the invariants of the 4-ball, u_g1 of a
# +1-framed unknot handle, u_10 of a 0-framed knot handle.
print()
print("dispatch by name works too:", build("u_g1", 4).fiber)
