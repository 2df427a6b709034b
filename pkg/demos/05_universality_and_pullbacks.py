#!/usr/bin/env python3
"""Walkthrough: universality reports, pullbacks, and witness plans.

A fibration is universal when every fibration with the same fiber over a
bounded base is a pullback of it; strongly universal when the pulling map
can be an orientation-preserving immersion.  The report checks the
characterizing conditions; the witness search constructs the pullback plan.
"""

import random

from lefschetz import (
    ANNULUS,
    DISK,
    ImmersionWitness,
    LefschetzFibration,
    Letter,
    MCWord,
    SignedCycle,
    SurfaceSpec,
    TwistGen,
    boundary_permutation_gen,
    global_conjugate,
    nonseparating_curve,
    pullback,
    substitution_witness,
    u_g1,
    p_g,
    universality_report,
)

for name, f in [("u_g1(2)", u_g1(2)), ("p_g(2)", p_g(2))]:
    r = universality_report(f)
    print(f"{name}: twists {r.cond_lef.status}, every type hit: {r.cond2}, "
          f"both signs: {r.cond2strong}")
    print(f"   universal: {r.universal}, strongly universal: {r.strongly_universal}")

# With two or more boundary circles the base must supply boundary
# permutations: over a disk the permutation condition fails, over an
# annulus with a swapping monodromy it holds.
fib = SurfaceSpec(1, 2)
cycles = (
    SignedCycle(nonseparating_curve(fib, (1, 0, 0), "a"), 1),
    SignedCycle(nonseparating_curve(fib, (0, 1, 0), "b"), -1),
)
disk_version = LefschetzFibration(fib, DISK, cycles)
swap = boundary_permutation_gen(fib, (1, 0), "swap")
annulus_version = LefschetzFibration(fib, ANNULUS, cycles, (swap,))
print("\nF(1,2) over the disk, permutation condition:",
      universality_report(disk_version).cond_perm)
print("same monodromy over the annulus with a swap:",
      universality_report(annulus_version).cond_perm)

# Witness search: scramble u_g1(2) by a conjugation and recover a plan that
# pulls the scrambled fibration back out of the original.
rng = random.Random(3)
u = u_g1(2)
letters = []
for c in [cy.curve for cy in u.cycles]:
    letters.append(Letter(TwistGen(c, "right")))
    letters.append(Letter(TwistGen(c, "left")))
word = MCWord(u.fiber, tuple(rng.choice(letters) for _ in range(3)))
target = global_conjugate(u, word)

plan = substitution_witness(u, target, depth=4)
print("\nwitness found:", plan is not None,
      "- orientation-preserving immersion:", isinstance(plan, ImmersionWitness))
print("entries (source cycle, word length, local degree):",
      [(e.source, len(e.conjugator), e.local_degree) for e in plan.entries])
print("pullback reproduces the target exactly:", pullback(u, plan) == target)
