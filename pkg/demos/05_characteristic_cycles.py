#! /usr/bin/env python3
"""Characteristic cycles of monomial modules over F[y_i, z_i]/(y_i z_i).

The ring has 2^f minimal primes, one for each way of choosing y_i or z_i at
every index.  The prime choosing only z's is singled out as p0.
"""

from gl2modp import ModuleSpec, Monomial, MonomialIdeal, char_cycle, minimal_primes, mult_at_prime, p0

f = 2
primes = minimal_primes(f)
print("minimal primes:", [str(q) for q in primes])
print("p0 =", p0(f))

# A cyclic module R/I has multiplicity 1 at q when I lies inside q, else 0.

I = MonomialIdeal([Monomial.parse("y0*z1", f), Monomial.parse("z0", f)])
print("I =", I)
for q in primes:
    print(f"  mult at {q}: {mult_at_prime(I, q)}")

# Cycles add over direct sums and over filtrations given as layers.

A = ModuleSpec(((I, 2),))
B = ModuleSpec(((MonomialIdeal([Monomial.parse("y1", f)]), 1),))
print("cycle(A)     =", char_cycle(A, f))
print("cycle(B)     =", char_cycle(B, f))
print("cycle(A + B) =", char_cycle(A + B, f))
assert char_cycle(A + B, f) == char_cycle(A, f) + char_cycle(B, f)

stacked = ModuleSpec(layers=(A, B))
print("layered      =", char_cycle(stacked, f))
