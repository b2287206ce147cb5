"""The ten acceptance criteria, each timed against its limit.

Every test prints one line ``criterion N: PASS|FAIL (elapsed / limit)`` to the
terminal, whatever the outcome, and then asserts.
"""

import random
import time
from contextlib import contextmanager
from itertools import product
from math import comb

import pytest

from gl2modp import charcycle as cc
from gl2modp import lattice as lt
from gl2modp import oracles
from gl2modp.diagram import (
    hypothesis_profile,
    jh_meets_weightset,
    jh_principal_series,
    length_zero_weight,
    serre_weights,
)
from gl2modp.tuples import enumerate_D, enumerate_P_ind, identity_tuple, j_set, length
from gl2modp.verify import random_generic_weight, random_ideal, random_module
from gl2modp.weights import (
    IRREDUCIBLE,
    REDUCIBLE,
    InertialData,
    Params,
    Result,
    char_of_weight,
    conj_s,
    is_globally_generic,
    required_genericity,
    weight_s,
)

pytestmark = pytest.mark.acceptance

GRID_PRIMES = (29, 31, 37)


@contextmanager
def criterion(number, title, limit, capsys):
    """Time the body; print a PASS/FAIL line; fail on a false outcome or overrun."""
    outcome = {"ok": False}
    start = time.perf_counter()
    try:
        yield outcome
    finally:
        elapsed = time.perf_counter() - start
        ok = outcome["ok"] and elapsed < limit
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s / {limit} s) {title}")
    assert outcome["ok"], f"criterion {number} property failed"
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f} s, limit {limit} s"


def test_criterion_01_tuple_set_counts(capsys):
    with criterion(1, "tuple-set counts and candidate-filter equality, f <= 6", 1.0, capsys) as out:
        good = True
        for f in range(1, 7):
            P = Params(29, f)
            D, PS = enumerate_D(P), enumerate_P_ind(P)
            good &= len(D) == 2**f and len(PS) == 2**f
            good &= D == oracles.brute_weight_set_tuples(P)
            good &= PS == oracles.brute_principal_series_tuples(P)
        out["ok"] = good


def test_criterion_02_length_bijection(capsys):
    with criterion(2, "J-set bijection onto subsets, level sizes C(f, l), f <= 6", 1.0, capsys) as out:
        good = True
        for f in range(1, 7):
            P = Params(29, f)
            D = enumerate_D(P)
            subsets = {frozenset(s) for k in range(f + 1) for s in _subsets(f, k)}
            images = [j_set(lam, P) for lam in D]
            good &= len(set(images)) == len(D) and set(images) == subsets
            good &= all(sum(length(lam, P) == ell for lam in D) == comb(f, ell) for ell in range(f + 1))
        out["ok"] = good


def _subsets(f, k):
    from itertools import combinations

    return combinations(range(f), k)


def test_criterion_03_intersection(capsys):
    with criterion(3, "principal-series set meets weight set only in the identity, f <= 6", 1.0, capsys) as out:
        out["ok"] = all(
            set(enumerate_P_ind(Params(29, f))) & set(enumerate_D(Params(29, f))) == {identity_tuple(f)}
            for f in range(1, 7)
        )


def test_criterion_04_weight_engine(capsys):
    with criterion(4, "character injectivity and weight_s oracle, p in {29,31,37}, f in {1,2}", 5.0, capsys) as out:
        rng = random.Random(2024)
        good = True
        for p, f in product(GRID_PRIMES, (1, 2)):
            P = Params(p, f)
            injective, count = oracles.character_injective_on_generic(1, P)
            good &= injective and count == (p - 3) ** f * P.order
            for _ in range(500):
                sigma = random_generic_weight(P, 1, rng)
                image = weight_s(sigma, P)
                good &= oracles.brute_weight_s(sigma, P) == [image]
                good &= char_of_weight(image, P) == conj_s(char_of_weight(sigma, P))
                good &= weight_s(image, P) == sigma
        out["ok"] = good


def test_criterion_05_jh_constituents(capsys):
    with criterion(5, "JH constituents meet the weight set in {sigma0}, all length-0 sigma0, f <= 3", 10.0, capsys) as out:
        good, cases = True, 0
        for p, f in product(GRID_PRIMES, (1, 2, 3)):
            P = Params(p, f)
            for r in product(range(1, p - 2), repeat=f):
                rho = InertialData(r)
                if r == (p - 3,) * f:
                    continue  # excluded inertial data; its sigma0 is not attached to any weight set
                W = serre_weights(rho, P)
                s0 = length_zero_weight(W)
                jh = jh_principal_series(s0, P)
                good &= len(jh) == 2**f and s0 in jh
                good &= jh_meets_weightset(s0, W, P) == {s0}
                cases += 1
        good &= cases == sum((p - 3) ** f - 1 for p, f in product(GRID_PRIMES, (1, 2, 3)))
        out["ok"] = good


def test_criterion_06_length_bounds(capsys):
    with criterion(6, "longest profile chains equal the dimension-difference bound", 30.0, capsys) as out:
        good = True
        # exhaustive: F_2 and F_3, r <= 2, f <= 2, both kinds
        for c, r, f, kind in product((2, 3), (1, 2), (1, 2), (REDUCIBLE, IRREDUCIBLE)):
            P = Params(3, f)
            good &= lt.max_chain_check(P, r, c, trials=6, kind=kind, seed=r * 10 + f, exhaustive_limit=400)
            zero, full = lt.zero_profile(kind, r, P, c), lt.full_profile(kind, r, P, c)
            expect = r * (f + 1) if kind == REDUCIBLE else r
            good &= lt.longest_chain(zero, full) == expect == lt.length_bound(full, zero, P)
            if kind == REDUCIBLE:
                rem = lt.ps_decomposition(full, P)
                good &= lt.longest_chain(zero, rem.remainder) == r * (f - 1) == rem.remainder_length_bound
        # randomized: r <= 4, f <= 3
        rng = random.Random(7)
        for r, f, kind in product(range(1, 5), range(1, 4), (REDUCIBLE, IRREDUCIBLE)):
            P = Params(3, f)
            good &= lt.max_chain_check(P, r, 3, trials=4, kind=kind, seed=rng.randrange(10**6), exhaustive_limit=0)
            if kind == REDUCIBLE:
                full, zero = lt.full_profile(kind, r, P), lt.zero_profile(kind, r, P)
                good &= lt.length_bound(full, zero, P) == r * (f + 1)
                rem = lt.ps_decomposition(full, P)
                chain = lt.random_chain(zero, rem.remainder, rng, refine=True)
                good &= len(chain) - 1 == r * (f - 1) == rem.remainder_length_bound
        out["ok"] = good


def _criterion7_pairs():
    rng = random.Random(77)
    pairs = []
    for _ in range(1000):
        f, r = rng.randint(1, 3), rng.randint(1, 4)
        P = Params(3, f)
        pairs.append((P, lt.random_nested_pair(REDUCIBLE, r, P, 3, rng)))
    return pairs


def test_criterion_07_socle_additivity(capsys):
    with criterion(7, "socle additivity on 1000 random nested profile pairs", 5.0, capsys) as out:
        good = True
        for P, (big, small) in _criterion7_pairs():
            quot = lt.quotient_profile(big, small)
            good &= lt.soc_length(small, P) + lt.soc_length(quot, P) == lt.soc_length(big, P)
        out["ok"] = good


def test_criterion_08_multiplicity_engine(capsys):
    pairs = _criterion7_pairs()
    with criterion(8, "multiplicities vs saturation oracle, cycle additivity, p0 = socle", 10.0, capsys) as out:
        rng = random.Random(88)
        good = True
        for f in (1, 2, 3):
            primes = cc.minimal_primes(f)
            for _ in range(1000):
                I = random_ideal(f, rng)
                good &= all(cc.mult_at_prime(I, q) == oracles.saturation_mult(I, q) for q in primes)
            for _ in range(200):
                A, B = random_module(f, rng), random_module(f, rng)
                good &= cc.char_cycle(A + B, f) == cc.char_cycle(A, f) + cc.char_cycle(B, f)
        for P, (big, small) in pairs:
            for prof in (big, small, lt.quotient_profile(big, small)):
                good &= cc.profile_p0_multiplicity(prof, P) == lt.soc_length(prof, P)
        out["ok"] = good


def test_criterion_09_hypothesis_profile(capsys):
    with criterion(9, "Ext dimensions C(2f, i) r, symmetric, total 4^f r, r <= 5, f <= 5", 1.0, capsys) as out:
        good = True
        for r, f, kind in product(range(1, 6), range(1, 6), (REDUCIBLE, IRREDUCIBLE)):
            H = hypothesis_profile(r, Params(29, f), kind)
            dims = [H.ext_dim(i) for i in range(2 * f + 1)]
            good &= dims == [comb(2 * f, i) * r for i in range(2 * f + 1)]
            good &= dims == dims[::-1] and sum(dims) == H.ext_total == 4**f * r
        out["ok"] = good


EXPECTED_TABLE = {
    Result.GRADED_STRUCTURE: lambda f: 9,
    Result.DIMENSION_EQUALS_SOCLE: lambda f: 2 * f,
    Result.SOCLE_GENERATION: lambda f: 2 * f,
    Result.PRINCIPAL_SERIES_SPLIT: lambda f: 2 * f,
    Result.COHEN_MACAULAY: lambda f: max(9, 2 * f + 1),
    Result.FINITE_LENGTH: lambda f: max(9, 2 * f + 1),
    Result.LATTICE_MODEL: lambda f: max(9, 2 * f + 1),
    Result.TORSION_EXACTNESS: lambda f: max(9, 2 * f + 1),
    Result.K1_TORSION_STRUCTURE: lambda f: max(9, 2 * f + 1),
    Result.SOCLE_EXACTNESS: lambda f: max(9, 2 * f + 1),
    Result.K1_INVARIANTS_EXACTNESS: lambda f: max(9, 2 * f + 1),
    Result.SUBQUOTIENT_STRUCTURE: lambda f: max(9, 2 * f + 1),
    Result.SUPERSINGULAR_CONSTITUENTS: lambda f: max(9, 2 * f + 1),
    Result.GLOBAL_FINITE_LENGTH: lambda f: max(12, 2 * f + 1),
    Result.GLOBAL_HYPOTHESES: lambda f: 12,
}


def test_criterion_10_thresholds(capsys):
    with criterion(10, "genericity table and the p = 29 global window", 1.0, capsys) as out:
        good = set(EXPECTED_TABLE) == set(Result)
        for res, rule in EXPECTED_TABLE.items():
            good &= all(required_genericity(res, f) == rule(f) for f in range(1, 13))
        good &= required_genericity(Result.GRADED_STRUCTURE, 3) == 9
        good &= required_genericity(Result.FINITE_LENGTH, 5) == 11
        good &= required_genericity(Result.GLOBAL_FINITE_LENGTH, 1) == 12
        P = Params(29, 1)
        good &= max(12, 3) < 13 < 29 - max(15, 6)
        good &= is_globally_generic(InertialData((13,)), P)
        good &= not any(is_globally_generic(InertialData((r,)), P) for r in range(29) if r != 13)
        out["ok"] = good
