#! /usr/bin/env python3
"""Affine tuples, the two tuple sets, and the grading by length."""

from collections import Counter

from gl2modp import (
    AffineTuple,
    Params,
    e_twist,
    enumerate_D,
    enumerate_P_ind,
    j_set,
    length,
    weight_of_tuple,
)

p = 29

# Tuples are written one token per coordinate: x+0, x+1, x-1, P-2-x, P-3-x,
# P-1-x.  Parsing and printing round-trip.

lam = AffineTuple.parse(["x+1", "P-2-x"], p)
print("lam =", " ".join(lam.tokens(p)))

# Feed it a digit vector r.  The digits come out as lam(r) and the twist
# e(lam)(r) is computed from a sum that is always even for members of the
# two sets.

P2 = Params(p, 2)
r = (3, 4)
print("twist:", e_twist(lam, r, P2))
print("weight:", weight_of_tuple(lam, r, P2))

# -----------------------------------------------------------------------------
# The weight set D has 2^f tuples, and so does the principal-series set.
# They share only the identity tuple.

for f in range(1, 5):
    P = Params(p, f)
    D, PS = enumerate_D(P), enumerate_P_ind(P)
    shared = set(D) & set(PS)
    print(f"f={f}: |D|={len(D)}, |P|={len(PS)}, shared={[t.tokens(p) for t in shared]}")

# -----------------------------------------------------------------------------
# Each tuple in D has a J-set: the coordinates carrying a minus form.  Its size
# is the length.  Every subset of {0..f-1} shows up exactly once, so the number
# of tuples of length l is C(f, l).

P4 = Params(p, 4)
print("J-sets in D for f=4 are distinct:", len({j_set(t, P4) for t in enumerate_D(P4)}) == 16)
print("length histogram:", sorted(Counter(length(t, P4) for t in enumerate_D(P4)).items()))
