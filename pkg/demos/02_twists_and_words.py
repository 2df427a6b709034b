#!/usr/bin/env python3
"""Walkthrough: Dehn twists as transvections and words of mapping classes.

A right twist about a curve c moves a class x to x + <c, x> c.  Words of
twists and bundle generators evaluate to (matrix, boundary permutation)
pairs, and everything preserves the intersection pairing exactly.
"""

from lefschetz import (
    Letter,
    MCWord,
    SurfaceSpec,
    TwistGen,
    act_on_curve,
    boundary_permutation_gen,
    evaluate,
    nonseparating_curve,
    separating_curve,
    twist_matrix,
    twist_word,
)
from lefschetz.homology import mat_identity, mat_mul

s = SurfaceSpec(1, 1)
a = nonseparating_curve(s, (1, 0), "a")
b = nonseparating_curve(s, (0, 1), "b")

print("twist matrix of a (right-handed):")
for row in twist_matrix(a, "right"):
    print("  ", row)

moved = act_on_curve(twist_word(TwistGen(a)), b)
print("t_a sends b to class", moved.hom, "- same type:", moved.cls)

# On the torus the composite t_a t_b has order six on homology.
rep = evaluate(twist_word(TwistGen(a), TwistGen(b)))
power = mat_identity(2)
for k in range(1, 7):
    power = mat_mul(power, rep.matrix)
    if power == mat_identity(2):
        print(f"(t_a t_b)^{k} is the identity on homology")
        break

# Formal inverses cancel.
w = MCWord(s, (Letter(TwistGen(a)), Letter(TwistGen(b), -1)))
print("w * w^-1 evaluates to identity:", evaluate(w * w.inverse()).is_identity)

# Bundle generators can permute boundary circles; twists never do.
s4 = SurfaceSpec(0, 4)
swap = boundary_permutation_gen(s4, (2, 1, 0, 3), "swap circles 1 and 3")
curve = separating_curve(s4, {1, 2}, (0, 0), "c")
out = act_on_curve(MCWord(s4, (Letter(swap),)), curve)
print("swapping circles 1,3 moves the side", set(curve.boundary_subset()),
      "to", set(out.boundary_subset()), "- type unchanged:", out.cls == curve.cls)
