"""Weight sets graded by length, principal-series constituents, hypothesis counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping
from types import MappingProxyType

from .errors import PreconditionError, ValidationError
from .tuples import (
    AffineTuple,
    length,
    principal_series_tuples,
    weights_of_tuples,
    weight_set_tuples,
)
from .weights import (
    IRREDUCIBLE,
    KINDS,
    REDUCIBLE,
    InertialData,
    Params,
    SerreWeight,
    char_of_weight,
    is_inertial_generic,
    is_weight_generic,
)


@dataclass(frozen=True)
class WeightSet:
    entries: dict[AffineTuple, SerreWeight]
    by_length: Mapping[int, tuple[AffineTuple, ...]]

    def weights(self) -> set[SerreWeight]:
        return set(self.entries.values())

    def length_of(self, sigma: SerreWeight) -> int:
        for ell, lams in self.by_length.items():
            if any(self.entries[lam] == sigma for lam in lams):
                return ell
        raise PreconditionError(f"{sigma} is not in the weight set")

    def of_length(self, ell: int) -> list[SerreWeight]:
        return [self.entries[lam] for lam in self.by_length.get(ell, ())]


def serre_weights(rho: InertialData, P: Params) -> WeightSet:
    """Weights of a 0-generic reducible split representation, keyed by tuple."""
    if rho.kind != REDUCIBLE:
        raise PreconditionError("explicit weight lists exist only for the reducible split case")
    if not is_inertial_generic(rho, 0, P):
        raise PreconditionError(f"inertial data {rho.r_digits} is not 0-generic")
    lams = weight_set_tuples(P)
    entries = dict(zip(lams, weights_of_tuples(lams, rho.r_digits, P)))
    return WeightSet(entries, _levels(P))


@lru_cache(maxsize=256)
def _levels(P: Params) -> dict[int, tuple[AffineTuple, ...]]:
    by_length: dict[int, list[AffineTuple]] = {ell: [] for ell in range(P.f + 1)}
    for lam in weight_set_tuples(P):
        by_length[length(lam, P)].append(lam)
    return MappingProxyType({ell: tuple(v) for ell, v in by_length.items()})


def jh_principal_series(sigma0: SerreWeight, P: Params) -> set[SerreWeight]:
    """Jordan-Hoelder constituents of ``Ind_I^K`` of the character of ``sigma0``."""
    sigma0.validate(P)
    if not is_weight_generic(sigma0, 1, P):
        raise PreconditionError(f"{sigma0} is not 1-generic")
    m, order = sigma0.twist, P.order
    out = set()
    for w in weights_of_tuples(principal_series_tuples(P), sigma0.digits, P):
        # twisting commutes with induction
        out.add(SerreWeight(w.digits, (w.twist + m) % order))
    return out


def jh_meets_weightset(sigma0: SerreWeight, W: WeightSet, P: Params) -> set[SerreWeight]:
    """Constituents of the principal series of ``sigma0`` that lie in ``W``.

    ``sigma0`` must be the length-0 weight of ``W``; the expected answer is
    ``{sigma0}``.
    """
    if sigma0 not in W.weights():
        raise PreconditionError(f"{sigma0} is not in the weight set")
    if W.length_of(sigma0) != 0:
        raise PreconditionError(f"{sigma0} does not have length 0")
    return jh_principal_series(sigma0, P) & W.weights()


def length_zero_weight(W: WeightSet) -> SerreWeight:
    (lam,) = W.by_length[0]
    return W.entries[lam]


def char_injectivity_check(W: WeightSet, P: Params) -> bool:
    chars = [char_of_weight(w, P) for w in W.entries.values()]
    return len(set(chars)) == len(chars)


@dataclass(frozen=True)
class HypothesisProfile:
    """Counts forced on a representation of multiplicity ``r``.

    ``ext_dims[i]`` is the dimension of ``Ext^i_{I/Z1}(chi, pi)`` for a
    character occurring in ``pi[m]``; it vanishes for the others.
    """

    r: int
    f: int
    kind: str
    ext_dims: tuple[int, ...] = field(repr=False)
    socle_length: int
    weight_count: int
    torsion_multiplicity: int

    def ext_dim(self, i: int) -> int:
        return self.ext_dims[i] if 0 <= i <= 2 * self.f else 0

    @property
    def ext_total(self) -> int:
        return sum(self.ext_dims)


def hypothesis_profile(r: int, P: Params, kind: str = REDUCIBLE) -> HypothesisProfile:
    if not isinstance(r, int) or r < 1:
        raise ValidationError(f"multiplicity r must be a positive integer, got {r}")
    if kind not in KINDS:
        raise ValidationError(f"kind must be one of {KINDS}, got {kind!r}")
    f = P.f
    # both kinds have 2^f weights; for the irreducible kind only the count is known
    n_weights = len(weight_set_tuples(P)) if kind == REDUCIBLE else 2**f
    return HypothesisProfile(
        r=r,
        f=f,
        kind=kind,
        ext_dims=tuple(comb(2 * f, i) * r for i in range(2 * f + 1)),
        socle_length=r * n_weights,
        weight_count=n_weights,
        torsion_multiplicity=r,
    )


__all__ = [
    "IRREDUCIBLE",
    "REDUCIBLE",
    "HypothesisProfile",
    "WeightSet",
    "char_injectivity_check",
    "hypothesis_profile",
    "jh_meets_weightset",
    "jh_principal_series",
    "length_zero_weight",
    "serre_weights",
]
