"""Named invariant checks and the grid sweep behind ``gl2modp verify``.

Every check returns a :class:`Check`; a failing check carries the first
counterexample found as its witness.  Random choices come from a seeded
``random.Random`` so repeated runs give identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Iterable

from sympy import primerange

from . import charcycle as cc
from . import lattice as lt
from . import oracles
from .diagram import (
    char_injectivity_check,
    hypothesis_profile,
    jh_meets_weightset,
    jh_principal_series,
    length_zero_weight,
    serre_weights,
)
from .errors import Gl2ModpError
from .tuples import (
    e_twist,
    identity_tuple,
    j_set,
    principal_series_tuples,
    weight_of_tuple,
    weight_set_tuples,
)
from .weights import (
    IRREDUCIBLE,
    REDUCIBLE,
    InertialData,
    Params,
    Result,
    SerreWeight,
    char_of_weight,
    conj_s,
    count_generic_weights,
    make_character,
    make_weight,
    required_genericity,
    weight_s,
)


@dataclass
class Check:
    name: str
    ok: bool
    witness: Any = None

    def as_dict(self) -> dict:
        return {"name": self.name, "status": "pass" if self.ok else "fail", "witness": self.witness}


def _first_failure(name: str, cases: Iterable, test: Callable, summary: Any = None) -> Check:
    n = 0
    for case in cases:
        n += 1
        try:
            good = test(case)
        except Gl2ModpError as exc:
            return Check(name, False, {"case": _jsonable(case), "error": str(exc)})
        if not good:
            return Check(name, False, {"case": _jsonable(case)})
    return Check(name, True, summary if summary is not None else {"cases": n})


def _jsonable(x: Any) -> Any:
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if isinstance(x, SerreWeight):
        return {"digits": list(x.digits), "twist": x.twist}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, lt.Subspace):
        return [list(v) for v in x.basis]
    if isinstance(x, lt.SubrepProfile):
        return {"kind": x.kind, "dims": list(x.dims)}
    return str(x)


def random_generic_weight(P: Params, n: int, rng: random.Random) -> SerreWeight:
    digits = [rng.randint(n, P.p - 2 - n) for _ in range(P.f)]
    return make_weight(digits, rng.randrange(P.order), P)


def random_generic_digits(P: Params, lo: int, hi: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(P.f))


# --------------------------------------------------------------- weights


def check_char_injective(P: Params) -> Check:
    ok, n = oracles.character_injective_on_generic(1, P)
    return Check(f"weights.char_injective_1generic[p={P.p},f={P.f}]", ok, {"weights": n})


def check_boundary_collision(P: Params) -> Check:
    m = 0
    low = make_weight((0,) * P.f, m, P)
    high = make_weight((P.p - 1,) * P.f, m, P)
    same = char_of_weight(low, P) == char_of_weight(high, P)
    return Check(
        f"weights.boundary_collision_witness[p={P.p},f={P.f}]",
        same,
        {"low": _jsonable(low), "high": _jsonable(high)},
    )


def check_conj_s_involution(P: Params, rng: random.Random, samples: int) -> Check:
    cases = [make_character(rng.randrange(P.order), rng.randrange(P.order), P) for _ in range(samples)]
    return _first_failure(
        f"weights.conj_s_involution[p={P.p},f={P.f}]", cases, lambda chi: conj_s(conj_s(chi)) == chi
    )


def check_weight_s(P: Params, rng: random.Random, samples: int) -> Check:
    """Closed form equals the exhaustive character search, and is an involution."""
    if P.p - 3 < 1:
        return Check(f"weights.weight_s_oracle_involution[p={P.p},f={P.f}]", True, {"cases": 0})
    cases = [random_generic_weight(P, 1, rng) for _ in range(samples)]

    def test(sigma):
        out = weight_s(sigma, P)
        if oracles.brute_weight_s(sigma, P) != [out]:
            return False
        if char_of_weight(out, P) != conj_s(char_of_weight(sigma, P)) or out == sigma:
            return False
        return weight_s(out, P) == sigma

    return _first_failure(f"weights.weight_s_oracle_involution[p={P.p},f={P.f}]", cases, test)


def check_generic_count(P: Params) -> Check:
    cases = range(0, (P.p + 1) // 2 + 1)
    return _first_failure(
        f"weights.generic_count[p={P.p},f={P.f}]",
        cases,
        lambda n: count_generic_weights(n, P) == oracles.count_generic_weights_brute(n, P),
    )


def check_threshold_monotone(f_values: Iterable[int]) -> Check:
    def test(f):
        a = required_genericity(Result.GLOBAL_FINITE_LENGTH, f)
        b = required_genericity(Result.FINITE_LENGTH, f)
        c = required_genericity(Result.GRADED_STRUCTURE, f)
        return a >= b >= c

    return _first_failure("weights.threshold_monotone", list(f_values), test)


# ---------------------------------------------------------------- tuples


def check_tuple_sets(P: Params) -> list[Check]:
    f = P.f
    D, PS = weight_set_tuples(P), principal_series_tuples(P)
    checks = [
        Check(f"tuples.weight_set_count[f={f}]", len(D) == 2**f, {"count": len(D)}),
        Check(f"tuples.principal_series_count[f={f}]", len(PS) == 2**f, {"count": len(PS)}),
        Check(
            f"tuples.weight_set_equals_brute_force[f={f}]",
            D == oracles.brute_weight_set_tuples(P),
        ),
        Check(
            f"tuples.principal_series_equals_brute_force[f={f}]",
            PS == oracles.brute_principal_series_tuples(P),
        ),
    ]
    jsets = [j_set(lam, P) for lam in D]
    checks.append(
        Check(
            f"tuples.j_set_bijection[f={f}]",
            len(set(jsets)) == 2**f and all(s <= frozenset(range(f)) for s in jsets),
        )
    )
    counts = [sum(1 for s in jsets if len(s) == ell) for ell in range(f + 1)]
    checks.append(
        Check(
            f"tuples.length_counts_binomial[f={f}]",
            counts == [comb(f, ell) for ell in range(f + 1)],
            {"counts": counts},
        )
    )
    common = set(D) & set(PS)
    checks.append(
        Check(
            f"tuples.intersection_is_identity[f={f}]",
            common == {identity_tuple(f)},
            {"intersection": [lam.tokens(P.p) for lam in sorted(common)]},
        )
    )
    return checks


def check_parity(P: Params, rng: random.Random, samples: int) -> Check:
    lams = sorted(set(weight_set_tuples(P)) | set(principal_series_tuples(P)))
    cases = [
        (lam, tuple(rng.randrange(-3 * P.p, 3 * P.p) for _ in range(P.f)))
        for _ in range(samples)
        for lam in [rng.choice(lams)]
    ]

    def test(case):
        e_twist(*case, P)
        return True

    return _first_failure(f"tuples.twist_parity[p={P.p},f={P.f}]", cases, test)


def check_range_validity(P: Params, rng: random.Random, samples: int) -> Check:
    if P.p - 4 < 1:
        return Check(f"tuples.range_validity[p={P.p},f={P.f}]", True, {"cases": 0})
    D, PS = weight_set_tuples(P), principal_series_tuples(P)
    cases = [random_generic_digits(P, 1, P.p - 4, rng) for _ in range(samples)]

    def test(r):
        for lam in D:
            weight_of_tuple(lam, r, P)
        for lam in PS:
            weight_of_tuple(lam, r, P)
        return True

    return _first_failure(f"tuples.range_validity[p={P.p},f={P.f}]", cases, test)


# --------------------------------------------------------------- diagram


def length_zero_inputs(P: Params, rng: random.Random | None, samples: int | None):
    """Digit vectors that are 0-generic inertial data and 1-generic as a weight.

    All of them when ``rng`` is None, else ``samples`` random ones.
    """
    lo, hi = 1, P.p - 3
    if hi < lo:
        return []
    if rng is None:
        from itertools import product

        vecs = product(range(lo, hi + 1), repeat=P.f)
    else:
        vecs = (random_generic_digits(P, lo, hi, rng) for _ in range(samples))
    bad = {(0,) * P.f, (P.p - 3,) * P.f}
    return [v for v in vecs if v not in bad]


def check_weight_sets(P: Params, inputs) -> list[Check]:
    tag = f"[p={P.p},f={P.f}]"

    def levels(r):
        W = serre_weights(InertialData(r), P)
        sizes = [len(W.by_length[ell]) for ell in range(P.f + 1)]
        return sizes == [comb(P.f, ell) for ell in range(P.f + 1)] and len(W.weights()) == 2**P.f

    def meets(r):
        W = serre_weights(InertialData(r), P)
        s0 = length_zero_weight(W)
        jh = jh_principal_series(s0, P)
        return len(jh) == 2**P.f and s0 in jh and jh_meets_weightset(s0, W, P) == {s0}

    def inj(r):
        return char_injectivity_check(serre_weights(InertialData(r), P), P)

    return [
        _first_failure(f"diagram.level_sizes_binomial{tag}", inputs, levels),
        _first_failure(f"diagram.jh_meets_weightset_singleton{tag}", inputs, meets),
        _first_failure(f"diagram.char_injective_on_weightset{tag}", inputs, inj),
    ]


def check_f1_jh_is_weight_s(P: Params, rng: random.Random, samples: int) -> Check:
    if P.f != 1 or P.p - 3 < 1:
        return Check(f"diagram.f1_jh_equals_weight_s[p={P.p}]", True, {"cases": 0})
    cases = [random_generic_weight(P, 1, rng) for _ in range(samples)]
    return _first_failure(
        f"diagram.f1_jh_equals_weight_s[p={P.p}]",
        cases,
        lambda s: jh_principal_series(s, P) == {s, weight_s(s, P)},
    )


def check_hypothesis_profiles(r_max: int, f_max: int) -> Check:
    cases = [(r, f, kind) for r in range(1, r_max + 1) for f in range(1, f_max + 1) for kind in (REDUCIBLE, IRREDUCIBLE)]

    def test(case):
        r, f, kind = case
        H = hypothesis_profile(r, Params(3, f), kind)
        dims = [H.ext_dim(i) for i in range(2 * f + 1)]
        return (
            dims == [comb(2 * f, i) * r for i in range(2 * f + 1)]
            and dims == dims[::-1]
            and H.ext_total == 4**f * r
            and H.socle_length == r * 2**f
            and H.ext_dim(2 * f + 1) == 0
        )

    return _first_failure("diagram.ext_dims_binomial_symmetric", cases, test)


# --------------------------------------------------------------- lattice


def check_lattice(f: int, c: int, r: int, rng: random.Random, samples: int) -> list[Check]:
    P = Params(3, f)
    tag = f"[f={f},c={c},r={r}]"
    out = []

    def canon(_):
        vecs = [[rng.randrange(c) for _ in range(r)] for _ in range(rng.randint(0, r + 1))]
        A = lt.Subspace.span(vecs, r, c)
        shuffled = vecs[:]
        rng.shuffle(shuffled)
        combo = [[(x + 2 * y) % c for x, y in zip(u, v)] for u, v in zip(shuffled, shuffled[1:])]
        B = lt.Subspace.span(shuffled + combo, r, c)
        return A == B and A.vectors() == {tuple(v) for v in _span_brute(vecs, r, c)}

    out.append(_first_failure(f"lattice.canonical_form{tag}", range(samples), canon))

    def law(_):
        A = lt.random_subspace(r, c, rng)
        B = lt.random_subspace(r, c, rng)
        alg = lt.subspace_algebra(A, B)
        dA, dB, dS, dI = alg["dims"]
        brute_sum = oracles.vector_sum(A, B)
        brute_int = A.vectors() & B.vectors()
        return (
            dS + dI == dA + dB
            and alg["sum"].vectors() == brute_sum
            and alg["intersection"].vectors() == brute_int
        )

    out.append(_first_failure(f"lattice.dimension_law{tag}", range(samples), law))

    full_red, zero_red = lt.full_profile(REDUCIBLE, r, P, c), lt.zero_profile(REDUCIBLE, r, P, c)
    full_irr, zero_irr = lt.full_profile(IRREDUCIBLE, r, P, c), lt.zero_profile(IRREDUCIBLE, r, P, c)
    dec = lt.ps_decomposition(full_red, P)
    out.append(
        Check(
            f"lattice.headline_bounds{tag}",
            lt.length_bound(full_red, zero_red, P) == r * (f + 1)
            and lt.length_bound(full_irr, zero_irr, P) == r
            and dec.remainder_length_bound == r * (f - 1)
            and dec.remainder_socle_length == r * (2**f - 2),
            {
                "reducible": lt.length_bound(full_red, zero_red, P),
                "irreducible": lt.length_bound(full_irr, zero_irr, P),
                "remainder": dec.remainder_length_bound,
            },
        )
    )

    pairs = [lt.random_nested_pair(kind, r, P, c, rng) for kind in (REDUCIBLE, IRREDUCIBLE) for _ in range(samples)]

    def monotone(pair):
        big, small = pair
        if big == small:
            return lt.soc_length(big, P) == lt.soc_length(small, P)
        return lt.soc_length(small, P) < lt.soc_length(big, P)

    out.append(_first_failure(f"lattice.soc_strictly_monotone{tag}", pairs, monotone))

    def quot(pair):
        big, small = pair
        zero = lt.zero_profile(big.kind, r, P, c)
        q = lt.quotient_profile(big, small)
        return (
            lt.quotient_profile(big, zero) == big
            and lt.quotient_profile(big, big) == zero
            and all(
                qa.dim == b.dim - a.dim and (qa & a).dim == 0 and (qa + a) == b
                for qa, a, b in zip(q.spaces, small.spaces, big.spaces)
            )
        )

    out.append(_first_failure(f"lattice.quotient_profile{tag}", pairs, quot))
    out.append(
        _first_failure(
            f"lattice.socle_additivity{tag}", pairs, lambda pr: lt.socle_additivity_check(pr[0], pr[1], P)
        )
    )
    for kind in (REDUCIBLE, IRREDUCIBLE):
        out.append(
            Check(
                f"lattice.max_chain[{kind},f={f},c={c},r={r}]",
                lt.max_chain_check(P, r, c, trials=min(samples, 5), kind=kind, seed=rng.randrange(2**31)),
            )
        )
    return out


def _span_brute(vecs, r, c):
    from itertools import product

    out = set()
    for coeffs in product(range(c), repeat=len(vecs)):
        v = [0] * r
        for a, row in zip(coeffs, vecs):
            v = [(x + a * y) % c for x, y in zip(v, row)]
        out.add(tuple(v))
    return out


# ------------------------------------------------------------- charcycle


def random_monomial(f: int, rng: random.Random, max_exp: int = 2) -> cc.Monomial:
    y, z = [0] * f, [0] * f
    for i in range(f):
        which = rng.randrange(3)
        if which == 1:
            y[i] = rng.randint(1, max_exp)
        elif which == 2:
            z[i] = rng.randint(1, max_exp)
    return cc.Monomial.from_yz(y, z)


def random_ideal(f: int, rng: random.Random, max_gens: int = 3) -> cc.MonomialIdeal:
    """Random proper monomial ideal (possibly zero)."""
    while True:
        gens = [random_monomial(f, rng) for _ in range(rng.randint(0, max_gens))]
        I = cc.MonomialIdeal(gens)
        if not I.is_unit():
            return I


def random_module(f: int, rng: random.Random, max_summands: int = 3) -> cc.ModuleSpec:
    return cc.ModuleSpec(
        tuple((random_ideal(f, rng), rng.randint(1, 3)) for _ in range(rng.randint(0, max_summands)))
    )


def check_mult_saturation(f: int, rng: random.Random, samples: int) -> Check:
    primes = cc.minimal_primes(f)
    cases = [random_ideal(f, rng) for _ in range(samples)]
    return _first_failure(
        f"charcycle.mult_equals_saturation[f={f}]",
        cases,
        lambda I: all(cc.mult_at_prime(I, q) == oracles.saturation_mult(I, q) for q in primes),
    )


def check_mult_hilbert(f: int, rng: random.Random, samples: int) -> Check:
    primes = cc.minimal_primes(f)
    cases = [random_ideal(f, rng) for _ in range(samples)]
    return _first_failure(
        f"charcycle.mult_equals_hilbert_count[f={f}]",
        cases,
        lambda I: all(cc.mult_at_prime(I, q) == oracles.hilbert_count_mult(I, q) for q in primes),
    )


def check_cycle_additivity(f: int, rng: random.Random, samples: int) -> Check:
    cases = [(random_module(f, rng), random_module(f, rng)) for _ in range(samples)]

    def test(pair):
        A, B = pair
        zA, zB = cc.char_cycle(A, f), cc.char_cycle(B, f)
        layered = cc.ModuleSpec(layers=(A, B))
        return (
            cc.char_cycle(A + B, f) == zA + zB
            and cc.char_cycle(layered, f) == zA + zB
            and (zA + zB) - zB == zA
            and all(0 <= k <= A.total_multiplicity for k in zA.dense(f))
        )

    return _first_failure(f"charcycle.additivity_and_bounds[f={f}]", cases, test)


def check_cyclic_01(f: int, rng: random.Random, samples: int) -> Check:
    q0 = cc.p0(f)
    cases = [random_ideal(f, rng) for _ in range(samples)]
    return _first_failure(
        f"charcycle.cyclic_p0_mult_0_or_1[f={f}]", cases, lambda I: cc.mult_at_prime(I, q0) in (0, 1)
    )


def check_p0_equals_socle(f: int, c: int, r: int, rng: random.Random, samples: int) -> Check:
    P = Params(3, f)
    cases = [lt.random_profile(REDUCIBLE, r, P, c, rng) for _ in range(samples)]
    return _first_failure(
        f"charcycle.p0_mult_equals_socle[f={f},c={c},r={r}]",
        cases,
        lambda prof: cc.profile_p0_multiplicity(prof, P) == lt.soc_length(prof, P),
    )


# ----------------------------------------------------------------- sweep


def run_verify(p_max: int = 31, f_max: int = 4, seed: int = 0, samples: int = 20) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    primes = [p for p in primerange(3, p_max + 1)]
    checks.append(check_threshold_monotone(range(1, max(f_max, 6) + 1)))
    for f in range(1, min(f_max, 6) + 1):
        checks.extend(check_tuple_sets(Params(3, f)))
    for p in primes:
        for f in range(1, f_max + 1):
            P = Params(p, f)
            if f <= 2:
                checks.append(check_char_injective(P))
                checks.append(check_boundary_collision(P))
                if p <= 13:
                    checks.append(check_generic_count(P))
            checks.append(check_conj_s_involution(P, rng, samples))
            if f <= 2:
                checks.append(check_weight_s(P, rng, samples))
            checks.append(check_parity(P, rng, samples))
            checks.append(check_range_validity(P, rng, samples))
            inputs = length_zero_inputs(P, rng, samples)
            checks.extend(check_weight_sets(P, inputs))
            checks.append(check_f1_jh_is_weight_s(P, rng, samples))
    checks.append(check_hypothesis_profiles(5, max(f_max, 5)))
    for f in range(1, min(f_max, 3) + 1):
        for c in (2, 3):
            for r in (1, 2):
                checks.extend(check_lattice(f, c, r, rng, max(samples // 4, 2)))
            checks.append(check_p0_equals_socle(f, c, 3, rng, samples))
        checks.append(check_mult_saturation(f, rng, samples * 5))
        checks.append(check_mult_hilbert(f, rng, samples))
        checks.append(check_cycle_additivity(f, rng, samples))
        checks.append(check_cyclic_01(f, rng, samples))
    return checks
