#! /usr/bin/env python3
"""Profiles of subspaces, socle lengths, and longest chains over F_3."""

import random

from gl2modp import REDUCIBLE, Params, Subspace, SubrepProfile, length_bound, quotient_profile, soc_length
from gl2modp.lattice import full_profile, longest_chain, ps_decomposition, random_chain, zero_profile

# =============================================================================
# A profile assigns a subspace of F_c^r to every length 0..f (reducible split
# kind) or a single subspace (irreducible kind).  Subspaces are stored in
# reduced row echelon form, so equal spaces compare equal however they were
# spanned.

A = Subspace.span([[1, 2, 0], [2, 1, 1]], 3, 3)
B = Subspace.span([[0, 0, 1], [1, 2, 0]], 3, 3)
assert A == B
print("basis:", A.basis)

P = Params(3, 2)
small = SubrepProfile(REDUCIBLE, (Subspace.span([[1, 0, 0]], 3, 3), Subspace.zero(3, 3), A))
big = full_profile(REDUCIBLE, 3, P)

# Socle length weights the dimension at length l by C(f, l).

print("soc(small) =", soc_length(small, P), " soc(big) =", soc_length(big, P))

# The quotient profile picks complements, and socle length adds up.

q = quotient_profile(big, small)
print("quotient dims:", q.dims)
assert soc_length(small, P) + soc_length(q, P) == soc_length(big, P)

# =============================================================================
# How long can a chain of profiles between two nested ones be?  The bound is
# the total dimension difference, and it is reached.

zero = zero_profile(REDUCIBLE, 2, Params(3, 1), 2)
full = full_profile(REDUCIBLE, 2, Params(3, 1), 2)
print("bound:", length_bound(full, zero, Params(3, 1)), " longest:", longest_chain(zero, full))

chain = random_chain(zero_profile(REDUCIBLE, 3, P), big, random.Random(1), refine=True)
print("a refined random chain has", len(chain) - 1, "steps")

# Taking out the blocks at the two ends leaves a remainder of length r(f-1).

dec = ps_decomposition(full_profile(REDUCIBLE, 2, Params(3, 3)), Params(3, 3))
print("remainder bound:", dec.remainder_length_bound, " remainder socle:", dec.remainder_socle_length)
