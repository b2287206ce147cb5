import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl2modp import charcycle as cc
from gl2modp import lattice as lt
from gl2modp import oracles
from gl2modp.errors import NegativeCoefficientError, PreconditionError, ValidationError
from gl2modp.tuples import principal_series_tuples, weight_set_tuples
from gl2modp.verify import random_ideal, random_module
from gl2modp.weights import IRREDUCIBLE, REDUCIBLE, Params


def ideal(text, f):
    return cc.MonomialIdeal([cc.Monomial.parse(t, f) for t in text.split(",") if t])


def prime(text):
    return cc.MinimalPrime.parse(text)


def test_monomial_parse_and_print():
    m = cc.Monomial.parse("y0^2*z1", 2)
    assert m.y == (2, 0) and m.z == (0, 1) and m.degree == 3
    assert str(m) == "y0^2*z1"
    assert cc.Monomial.parse("1", 3).is_one()


@pytest.mark.parametrize("bad", ["y0*z0", "x0", "y5", "y"])
def test_monomial_rejects(bad):
    with pytest.raises(ValidationError):
        cc.Monomial.parse(bad, 2)


def test_ideal_is_minimalised():
    I = ideal("y0,y0^2*z1,z1", 2)
    assert I.generators == frozenset({cc.Monomial.parse("y0", 2), cc.Monomial.parse("z1", 2)})


def test_minimal_primes():
    assert [str(q) for q in cc.minimal_primes(1)] == ["(y0)", "(z0)"]
    assert cc.p0(1) == prime("(z0)") and cc.p0(1).is_p0()
    assert len(cc.minimal_primes(2)) == 4
    assert len(cc.minimal_primes(Params(5, 3))) == 8
    assert sum(q.is_p0() for q in cc.minimal_primes(3)) == 1


def test_mult_examples():
    zero = cc.MonomialIdeal([])
    assert all(cc.mult_at_prime(zero, q) == 1 for q in cc.minimal_primes(2))
    assert cc.mult_at_prime(ideal("y0", 1), cc.p0(1)) == 0
    I = ideal("y0*z1", 2)
    assert cc.mult_at_prime(I, prime("(z0,y1)")) == 0
    assert cc.mult_at_prime(I, cc.p0(2)) == 1


def test_mult_unit_ideal():
    with pytest.raises(PreconditionError):
        cc.mult_at_prime(ideal("1", 2), cc.p0(2))


def test_char_cycle_examples():
    free = cc.ModuleSpec(((cc.MonomialIdeal([]), 1),))
    assert cc.char_cycle(free, 1).dense(1) == [1, 1]
    two = cc.ModuleSpec(((ideal("z0", 1), 2),))
    Z = cc.char_cycle(two, 1)
    assert Z[prime("(y0)")] == 0 and Z[prime("(z0)")] == 2
    assert cc.char_cycle(cc.ModuleSpec(), 3) == cc.CycleVector.zero()


def test_cycle_arithmetic():
    q0 = cc.p0(2)
    a = cc.CycleVector({q0: 2, prime("(y0,z1)"): 1})
    assert a + cc.CycleVector.zero() == a
    assert cc.cycle_add(a, a)[q0] == 4
    assert cc.CycleVector({q0: 2}) - cc.CycleVector({q0: 1}) == cc.CycleVector({q0: 1})
    with pytest.raises(NegativeCoefficientError, match=r"\(z0,z1\)"):
        cc.cycle_sub(cc.CycleVector({q0: 1}), cc.CycleVector({q0: 2}))
    with pytest.raises(NegativeCoefficientError):
        cc.CycleVector({q0: -1})


def test_layers_add_up():
    A = cc.ModuleSpec(((ideal("y0", 2), 1), (ideal("z0*z1", 2), 2)))
    B = cc.ModuleSpec(((cc.MonomialIdeal([]), 1),), label="twisted")
    layered = cc.ModuleSpec(layers=(A, B))
    assert cc.char_cycle(layered, 2) == cc.char_cycle(A, 2) + cc.char_cycle(B, 2)
    assert layered.total_multiplicity == 4


def test_tuple_table():
    P = Params(29, 3)
    D = set(weight_set_tuples(P))
    assert all(cc.p0_multiplicity_of_tuple(lam, P) == 1 for lam in D)
    others = [lam for lam in principal_series_tuples(P) if lam not in D]
    assert others and all(cc.p0_multiplicity_of_tuple(lam, P) == 0 for lam in others)


def test_profile_p0_examples():
    P2 = Params(3, 2)
    assert cc.profile_p0_multiplicity(lt.full_profile(REDUCIBLE, 3, P2), P2) == 12
    assert cc.profile_p0_multiplicity(lt.zero_profile(REDUCIBLE, 3, P2), P2) == 0
    P1 = Params(3, 1)
    prof = lt.SubrepProfile(REDUCIBLE, (lt.Subspace.full(1), lt.Subspace.zero(1)))
    assert cc.profile_p0_multiplicity(prof, P1) == 1
    with pytest.raises(PreconditionError):
        cc.profile_p0_multiplicity(lt.full_profile(IRREDUCIBLE, 2, P1), P1)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**9))
def test_mult_against_oracles(f, seed):
    rng = random.Random(seed)
    I = random_ideal(f, rng)
    for q in cc.minimal_primes(f):
        m = cc.mult_at_prime(I, q)
        assert m == oracles.saturation_mult(I, q)
        assert m == oracles.hilbert_count_mult(I, q)
    assert cc.mult_at_prime(I, cc.p0(f)) in (0, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**9))
def test_cycle_additivity(f, seed):
    rng = random.Random(seed)
    A, B = random_module(f, rng), random_module(f, rng)
    zA, zB = cc.char_cycle(A, f), cc.char_cycle(B, f)
    assert cc.char_cycle(A + B, f) == zA + zB
    assert (zA + zB) - zA == zB
    assert all(0 <= k <= A.total_multiplicity for k in zA.dense(f))
