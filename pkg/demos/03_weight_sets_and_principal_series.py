#! /usr/bin/env python3
"""From inertial data to a weight set, then to a principal series.

A walk through one example at p = 31, f = 3.
"""

from gl2modp import InertialData, Params, jh_meets_weightset, jh_principal_series, serre_weights
from gl2modp.diagram import length_zero_weight

P = Params(31, 3)
rho = InertialData((5, 11, 20))

W = serre_weights(rho, P)
for ell in sorted(W.by_length):
    print(f"length {ell}:", ", ".join(str(w) for w in W.of_length(ell)))

# Eight weights, in groups of 1, 3, 3, 1.  The length-0 weight is the one
# attached to the identity tuple.

sigma0 = length_zero_weight(W)
print("sigma0 =", sigma0)

# The principal series built from sigma0 also has 2^f constituents.  Only one
# of them lies in W, and it is sigma0 itself.

jh = jh_principal_series(sigma0, P)
print("constituents:", len(jh))
print("meets W in:", jh_meets_weightset(sigma0, W, P))

# For f = 1 the picture collapses: two constituents, sigma0 and weight_s(sigma0).

from gl2modp import weight_s

P1 = Params(31, 1)
s = length_zero_weight(serre_weights(InertialData((9,)), P1))
print(sorted(map(str, jh_principal_series(s, P1))), "vs weight_s:", weight_s(s, P1))
