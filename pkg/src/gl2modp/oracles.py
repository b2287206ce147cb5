"""Independent brute-force routes used to cross-check the fast paths.

Nothing here shares code with the construction it checks: tuple sets are
found by filtering all ``4^f`` candidates against the cyclic implication
rules, multiplicities by counting standard monomials, subspace operations by
listing vectors.
"""

from __future__ import annotations

from itertools import product
from math import comb

import numpy as np

from .charcycle import MinimalPrime, Monomial, MonomialIdeal
from .lattice import Subspace
from .tuples import AffineForm, AffineTuple
from .weights import Params, SerreWeight, ToralCharacter, weights_with_character


def _filter_cyclic(P: Params, candidates, first_class, implies) -> list[AffineTuple]:
    """Tuples from ``candidates^f`` obeying ``form_i in class -> form_{i+1} in implies[class]``."""
    out = []
    for forms in product(candidates, repeat=P.f):
        ok = True
        for i in range(P.f):
            cur, nxt = forms[i], forms[(i + 1) % P.f]
            cls = "first" if cur in first_class else "second"
            if nxt not in implies[cls]:
                ok = False
                break
        if ok:
            out.append(AffineTuple(tuple(forms)))
    return sorted(out)


def brute_weight_set_tuples(P: Params) -> list[AffineTuple]:
    p = P.p
    x, x1 = AffineForm(1, 0), AffineForm(1, 1)
    m2, m3 = AffineForm(-1, p - 2), AffineForm(-1, p - 3)
    return _filter_cyclic(
        P,
        [x, x1, m2, m3],
        {x, x1},
        {"first": {x, m2}, "second": {m3, x1}},
    )


def brute_principal_series_tuples(P: Params) -> list[AffineTuple]:
    p = P.p
    x, xm = AffineForm(1, 0), AffineForm(1, -1)
    m2, m1 = AffineForm(-1, p - 2), AffineForm(-1, p - 1)
    return _filter_cyclic(
        P,
        [x, xm, m2, m1],
        {x, xm},
        {"first": {x, m2}, "second": {m1, xm}},
    )


def brute_weight_s(sigma: SerreWeight, P: Params) -> list[SerreWeight]:
    """Every weight other than ``sigma`` with the swapped character."""
    m = sigma.twist
    value = sum(r * P.p**i for i, r in enumerate(sigma.digits))
    swapped = ToralCharacter(m % P.order, (value + m) % P.order)
    return [w for w in weights_with_character(swapped, P) if w != sigma]


def character_injective_on_generic(n: int, P: Params) -> tuple[bool, int]:
    """Exhaustively test injectivity of the character map on n-generic weights.

    Returns ``(injective, number_of_weights)``.
    """
    lo, hi = n, P.p - 2 - n
    if hi < lo:
        return True, 0
    digits = np.array(list(product(range(lo, hi + 1), repeat=P.f)), dtype=np.int64)
    values = digits @ (P.p ** np.arange(P.f, dtype=np.int64))
    m = np.arange(P.order, dtype=np.int64)
    a_exp = (values[:, None] + m[None, :]) % P.order
    keys = a_exp * P.order + m[None, :]
    n_weights = keys.size
    return np.unique(keys).size == n_weights, n_weights


def count_generic_weights_brute(n: int, P: Params) -> int:
    good = sum(1 for d in product(range(P.p), repeat=P.f) if all(n <= r <= P.p - 2 - n for r in d))
    return good * P.order


def saturation_mult(I: MonomialIdeal, q: MinimalPrime) -> int:
    """Length of ``(R/I)_q`` by saturating generators.

    Unselected variables become units, so they are deleted from every
    generator.  If some generator becomes 1 the localized module vanishes.
    Otherwise every remaining generator involves a selected variable, and
    those are zero in the local ring (each is killed by its inverted partner),
    so the module is the residue field itself.
    """
    saturated = []
    for g in I.generators:
        y = [a if q.selection[i] == "y" else 0 for i, a in enumerate(g.y)]
        z = [b if q.selection[i] == "z" else 0 for i, b in enumerate(g.z)]
        saturated.append(Monomial.from_yz(y, z))
    if any(s.is_one() for s in saturated):
        return 0
    return 1


def hilbert_count_mult(I: MonomialIdeal, q: MinimalPrime) -> int:
    """Multiplicity along the component of ``q`` from standard-monomial counts.

    The component of ``q`` is the coordinate subspace of the unselected
    variables.  Count degree-``d`` monomials in those variables that lie
    outside ``I`` and compare with the count of all of them, for ``d`` large
    enough that a proper defect stays below one half.
    """
    f = q.f
    free = [("z" if s == "y" else "y", i) for i, s in enumerate(q.selection)]
    max_deg = max((g.degree for g in I.generators), default=0)
    d = 2 * (f - 1) * max_deg + 1 if f > 1 else max(max_deg, 1)
    total = comb(d + f - 1, f - 1)
    outside = 0
    for exps in _compositions(d, f):
        y, z = [0] * f, [0] * f
        for (var, i), a in zip(free, exps):
            (y if var == "y" else z)[i] = a
        if not I.contains(Monomial.from_yz(y, z)):
            outside += 1
    return round(outside / total)


def _compositions(d: int, k: int):
    if k == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest


def vector_sum(A: Subspace, B: Subspace) -> set:
    c = A.c
    return {tuple((x + y) % c for x, y in zip(a, b)) for a in A.vectors() for b in B.vectors()}


def log_size(n: int, c: int) -> int:
    k = 0
    while c**k < n:
        k += 1
    if c**k != n:
        raise ValueError(f"{n} is not a power of {c}")
    return k
