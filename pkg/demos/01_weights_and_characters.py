#! /usr/bin/env python3
"""Serre weights, their torus characters, and the weight_s swap.

Run with ``python3 demos/01_weights_and_characters.py``.
"""

from gl2modp import (
    Params,
    PreconditionError,
    char_of_weight,
    conj_s,
    is_weight_generic,
    make_weight,
    weight_s,
)

# =============================================================================
# Everything is parametrised by a prime p and an inertial degree f, which fix
# the field F_q with q = p^f.  Params validates both.

P = Params(29, 2)
print("q =", P.q, " q - 1 =", P.order)

# A weight is a digit vector in [0, p-1]^f plus a twist modulo q - 1.

sigma = make_weight((3, 4), 0, P)
print("sigma =", sigma)

# Its character on the diagonal torus is a pair of exponents modulo q - 1.
# With twist 0 the first exponent is 3 + 4*29 = 119 and the second is 0.

chi = char_of_weight(sigma, P)
print("character:", chi)
assert (chi.a_exp, chi.d_exp) == (119, 0)

# conj_s swaps the two exponents, and weight_s finds the unique weight whose
# character is the swapped one.  Doing it twice returns to the start.

tau = weight_s(sigma, P)
print("weight_s(sigma) =", tau)
assert char_of_weight(tau, P) == conj_s(chi)
assert weight_s(tau, P) == sigma

# =============================================================================
# Genericity.  A weight is n-generic when every digit sits in [n, p-2-n].
# Digit 0 is the boundary case: there the character no longer determines the
# weight, so weight_s refuses rather than guessing.

for digits in [(3, 4), (1, 27), (0, 5)]:
    print(digits, "1-generic:", is_weight_generic(make_weight(digits, 0, P), 1, P))

try:
    weight_s(make_weight((0, 5), 0, P), P)
except PreconditionError as err:
    print("refused:", err)

# The collision behind that refusal: all-zero digits and all-(p-1) digits give
# the same character.

low, high = make_weight((0, 0), 0, P), make_weight((28, 28), 0, P)
assert char_of_weight(low, P) == char_of_weight(high, P)
print("collision:", low, "and", high, "share", char_of_weight(low, P))
