import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl2modp import oracles
from gl2modp import lattice as lt
from gl2modp.errors import PreconditionError, ValidationError
from gl2modp.weights import IRREDUCIBLE, REDUCIBLE, Params

P1, P2, P3 = Params(3, 1), Params(3, 2), Params(3, 3)


def coord(dims, r=3, c=3, kind=REDUCIBLE):
    """Profile of coordinate subspaces span(e_0..e_{d-1})."""
    spaces = tuple(lt.Subspace.span([[int(i == j) for j in range(r)] for i in range(d)], r, c) for d in dims)
    return lt.SubrepProfile(kind, spaces)


def test_rref_canonical():
    A = lt.Subspace.span([[1, 2, 0], [2, 1, 1]], 3, 3)
    B = lt.Subspace.span([[2, 1, 1], [1, 2, 0], [0, 0, 1]], 3, 3)
    assert A == B
    for row in A.basis:
        lead = next(j for j, x in enumerate(row) if x)
        assert row[lead] == 1
    assert A.basis == ((1, 2, 0), (0, 0, 1))


def test_subspace_algebra_examples():
    A = lt.Subspace.span([[1, 0, 0, 0], [0, 1, 0, 0]], 4, 3)
    B = lt.Subspace.span([[0, 0, 1, 0], [0, 0, 0, 1]], 4, 3)
    alg = lt.subspace_algebra(A, B)
    assert alg["dims"] == (2, 2, 4, 0)
    same = lt.subspace_algebra(A, A)
    assert same["sum"] == same["intersection"] == A
    zero = lt.Subspace.zero(4, 3)
    z = lt.subspace_algebra(zero, B)
    assert z["sum"] == B and z["intersection"] == zero


def test_ambient_mismatch():
    with pytest.raises(ValidationError):
        lt.Subspace.full(2, 3) + lt.Subspace.full(3, 3)
    with pytest.raises(ValidationError):
        lt.Subspace.full(2, 3) & lt.Subspace.full(2, 2)


def test_all_subspaces_counts():
    # Gaussian binomials: F_2^3 has 1+7+7+1, F_3^2 has 1+4+1
    assert len(lt.all_subspaces(3, 2)) == 16
    assert len(lt.all_subspaces(2, 3)) == 6


def test_soc_length_examples():
    assert lt.soc_length(lt.full_profile(REDUCIBLE, 3, P2), P2) == 12
    assert lt.soc_length(lt.zero_profile(REDUCIBLE, 3, P2), P2) == 0
    irr = lt.SubrepProfile(IRREDUCIBLE, (lt.Subspace.span([[1, 0, 0], [0, 1, 0]], 3, 3),))
    assert lt.soc_length(irr, P3) == 16
    assert lt.dxi_dimension is lt.soc_length


def test_length_bound_examples():
    assert lt.length_bound(lt.full_profile(REDUCIBLE, 3, P2), lt.zero_profile(REDUCIBLE, 3, P2), P2) == 9
    assert lt.length_bound(lt.full_profile(IRREDUCIBLE, 3, P2), lt.zero_profile(IRREDUCIBLE, 3, P2), P2) == 3
    prof = coord((1, 2, 3))
    assert lt.length_bound(prof, prof, P2) == 0


def test_length_bound_names_failing_slot():
    with pytest.raises(PreconditionError, match="index 1"):
        lt.length_bound(coord((2, 0, 2)), coord((1, 1, 1)), P2)


def test_quotient_examples():
    big, small = coord((3, 3, 3)), coord((1, 2, 0))
    q = lt.quotient_profile(big, small)
    assert q.dims == (2, 1, 3)
    zero = lt.zero_profile(REDUCIBLE, 3, P2)
    assert lt.quotient_profile(big, zero) == big
    assert lt.quotient_profile(big, big) == zero


def test_quotient_complement_inside_non_coordinate_space():
    V2 = lt.Subspace.span([[1, 1, 0], [0, 1, 1]], 3, 3)
    V1 = lt.Subspace.span([[1, 2, 1]], 3, 3)
    assert V1 <= V2
    C = V1.complement_in(V2)
    assert C <= V2 and (C & V1).dim == 0 and (C + V1) == V2


def test_socle_additivity_trivial_cases():
    big = coord((2, 1, 3))
    assert lt.socle_additivity_check(big, lt.zero_profile(REDUCIBLE, 3, P2), P2)
    assert lt.socle_additivity_check(big, big, P2)


def test_longest_chain_examples():
    full = lt.full_profile(REDUCIBLE, 2, P1, 2)
    zero = lt.zero_profile(REDUCIBLE, 2, P1, 2)
    assert lt.longest_chain(zero, full) == 4
    full_i = lt.full_profile(IRREDUCIBLE, 2, P1, 3)
    zero_i = lt.zero_profile(IRREDUCIBLE, 2, P1, 3)
    assert lt.longest_chain(zero_i, full_i) == 2
    assert lt.longest_chain(full, full) == 0


@pytest.mark.parametrize("kind", [REDUCIBLE, IRREDUCIBLE])
@pytest.mark.parametrize("c", [2, 3])
def test_max_chain_check(kind, c):
    assert lt.max_chain_check(P2, 2, c, trials=4, kind=kind, seed=1)


def test_refined_chain_attains_bound():
    rng = random.Random(5)
    big, small = lt.full_profile(REDUCIBLE, 4, P3), lt.zero_profile(REDUCIBLE, 4, P3)
    chain = lt.random_chain(small, big, rng, refine=True)
    assert len(chain) - 1 == lt.length_bound(big, small, P3) == 16
    assert all(a < b for a, b in zip(chain, chain[1:]))


@pytest.mark.parametrize(
    "f,r,bound,soc", [(1, 2, 0, 0), (2, 3, 3, 6), (3, 1, 2, 6)]
)
def test_ps_decomposition(f, r, bound, soc):
    P = Params(3, f)
    dec = lt.ps_decomposition(lt.full_profile(REDUCIBLE, r, P), P)
    assert dec.remainder_length_bound == bound
    assert dec.remainder_socle_length == soc
    assert dec.pi0_multiplicity == dec.pif_multiplicity == r
    assert dec.remainder.dims[0] == dec.remainder.dims[-1] == 0


def test_ps_decomposition_refuses():
    with pytest.raises(PreconditionError):
        lt.ps_decomposition(coord((1, 1, 1)), P2)
    with pytest.raises(PreconditionError):
        lt.ps_decomposition(lt.full_profile(IRREDUCIBLE, 2, P2), P2)


def test_profile_shape_checks():
    with pytest.raises(ValidationError):
        lt.SubrepProfile(IRREDUCIBLE, (lt.Subspace.full(2), lt.Subspace.full(2)))
    with pytest.raises(ValidationError):
        lt.SubrepProfile(REDUCIBLE, (lt.Subspace.full(2), lt.Subspace.full(3)))


vec = st.lists(st.integers(0, 2), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(st.lists(vec, max_size=4), st.lists(vec, max_size=4), st.randoms(use_true_random=False))
def test_algebra_against_vector_sets(a, b, rnd):
    A, B = lt.Subspace.span(a, 3, 3), lt.Subspace.span(b, 3, 3)
    shuffled = a[:]
    rnd.shuffle(shuffled)
    assert lt.Subspace.span(shuffled, 3, 3) == A
    alg = lt.subspace_algebra(A, B)
    dA, dB, dS, dI = alg["dims"]
    assert dS + dI == dA + dB
    assert alg["sum"].vectors() == oracles.vector_sum(A, B)
    assert alg["intersection"].vectors() == A.vectors() & B.vectors()
    assert A.annihilator().dim == 3 - A.dim


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.sampled_from([2, 3, 5]), st.sampled_from([REDUCIBLE, IRREDUCIBLE]), st.integers(0, 10**6))
def test_nested_pairs(f, r, c, kind, seed):
    P = Params(3, f)
    rng = random.Random(seed)
    big, small = lt.random_nested_pair(kind, r, P, c, rng)
    assert small <= big
    assert lt.socle_additivity_check(big, small, P)
    if small != big:
        assert lt.soc_length(small, P) < lt.soc_length(big, P)
    q = lt.quotient_profile(big, small)
    assert q.dims == tuple(b - a for a, b in zip(small.dims, big.dims))
