"""Serre weights, characters of the finite torus, and genericity predicates.

A Serre weight for GL2 of an unramified extension of degree ``f`` is written
``(r_0, ..., r_{f-1}) (x) det^m`` with ``0 <= r_i <= p-1`` and
``0 <= m < q-1``.  Its space of I1-invariants is a line on which the torus
``diag(a, d)`` acts through ``a^(sum r_i p^i) * (ad)^m``; we store such a
character as the exponent pair ``(sum r_i p^i + m, m)`` modulo ``q-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from sympy.ntheory import isprime

from .errors import PreconditionError, ValidationError

REDUCIBLE = "reducible-split"
IRREDUCIBLE = "irreducible"
KINDS = (REDUCIBLE, IRREDUCIBLE)


@dataclass(frozen=True)
class Params:
    """Arithmetic context: an odd prime ``p`` and inertial degree ``f``."""

    p: int
    f: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValidationError("p must be an integer")
        if not isinstance(self.f, int) or isinstance(self.f, bool):
            raise ValidationError("f must be an integer")
        if self.p == 2:
            raise ValidationError("p must be odd (p = 2 is excluded)")
        if not isprime(self.p):
            raise ValidationError(f"p not prime: {self.p}")
        if self.f <= 0:
            raise ValidationError(f"f must be positive, got {self.f}")

    @cached_property
    def q(self) -> int:
        return self.p**self.f

    @property
    def order(self) -> int:
        """Order ``q - 1`` of the cyclic group in which exponents live."""
        return self.q - 1


def make_params(p: int, f: int) -> Params:
    return Params(p, f)


@dataclass(frozen=True, order=True, slots=True)
class SerreWeight:
    digits: tuple[int, ...]
    twist: int

    def __str__(self) -> str:
        return f"({','.join(map(str, self.digits))})(x)det^{self.twist}"

    def validate(self, P: Params) -> "SerreWeight":
        if len(self.digits) != P.f:
            raise ValidationError(
                f"weight has {len(self.digits)} digits, expected f = {P.f}"
            )
        for i, r in enumerate(self.digits):
            if not 0 <= r <= P.p - 1:
                raise ValidationError(f"digit r_{i} = {r} outside [0, {P.p - 1}]")
        if not 0 <= self.twist < P.order:
            raise ValidationError(f"twist {self.twist} outside [0, {P.order})")
        return self


def make_weight(digits: Sequence[int], twist: int, P: Params) -> SerreWeight:
    """Build a weight, reducing the twist into ``[0, q-1)`` and checking digits."""
    return SerreWeight(tuple(int(r) for r in digits), int(twist) % P.order).validate(P)


@dataclass(frozen=True, order=True)
class ToralCharacter:
    """``diag(a, d) -> a^a_exp * d^d_exp`` with exponents mod ``q-1``."""

    a_exp: int
    d_exp: int


def make_character(a_exp: int, d_exp: int, P: Params) -> ToralCharacter:
    return ToralCharacter(a_exp % P.order, d_exp % P.order)


def digit_value(digits: Sequence[int], p: int) -> int:
    """``sum r_i p^i``."""
    return sum(r * p**i for i, r in enumerate(digits))


def char_of_weight(sigma: SerreWeight, P: Params) -> ToralCharacter:
    sigma.validate(P)
    m = sigma.twist
    return make_character(digit_value(sigma.digits, P.p) + m, m, P)


def conj_s(chi: ToralCharacter) -> ToralCharacter:
    # conjugation by [[0, 1], [p, 0]] swaps the two diagonal entries
    return ToralCharacter(chi.d_exp, chi.a_exp)


def is_weight_generic(sigma: SerreWeight, n: int, P: Params) -> bool:
    if n < 0:
        raise PreconditionError(f"genericity level must be >= 0, got {n}")
    return all(n <= r <= P.p - 2 - n for r in sigma.digits)


def weight_s(sigma: SerreWeight, P: Params, *, check: bool = False) -> SerreWeight:
    """The weight other than ``sigma`` whose character is the swapped one.

    Closed form: complement the digits and shift the twist by the digit value.
    With ``check=True`` the result is compared with an exhaustive search.

    Accepted inputs have every digit in ``[1, p-2]``: the 1-generic weights
    together with their images, so the map can be applied twice.  A digit 0 or
    ``p-1`` is refused; the all-0 and all-``(p-1)`` vectors share a character
    and the answer would not be unique.
    """
    sigma.validate(P)
    if not all(1 <= r <= P.p - 2 for r in sigma.digits):
        raise PreconditionError(f"weight_s needs digits in [1, p-2], got {sigma}")
    out = make_weight(
        [P.p - 1 - r for r in sigma.digits],
        sigma.twist + digit_value(sigma.digits, P.p),
        P,
    )
    if check:
        target = conj_s(char_of_weight(sigma, P))
        found = [w for w in weights_with_character(target, P) if w != sigma]
        if found != [out]:
            raise AssertionError(f"weight_s({sigma}) = {out}, search gave {found}")
    return out


def weights_with_character(chi: ToralCharacter, P: Params) -> list[SerreWeight]:
    """All weights (any genericity) whose I1-character is ``chi``.

    The twist is forced by ``d_exp``; the digit vector must then have value
    ``a_exp - d_exp`` mod ``q-1``, found by scanning all ``p^f`` vectors.
    """
    m = chi.d_exp % P.order
    target = (chi.a_exp - chi.d_exp) % P.order
    out = []
    for digits in all_digit_vectors(P):
        if digit_value(digits, P.p) % P.order == target:
            out.append(SerreWeight(digits, m))
    return out


def all_digit_vectors(P: Params, lo: int = 0, hi: int | None = None) -> Iterator[tuple[int, ...]]:
    """Digit vectors with entries in ``[lo, hi]`` (default ``[0, p-1]``)."""
    hi = P.p - 1 if hi is None else hi
    return product(range(lo, hi + 1), repeat=P.f)


def count_generic_weights(n: int, P: Params) -> int:
    """Closed-form number of n-generic weights: ``(p-1-2n)^f (q-1)``."""
    width = P.p - 1 - 2 * n
    return width**P.f * P.order if width > 0 else 0


@dataclass(frozen=True)
class InertialData:
    """Restriction to inertia of a semisimple mod-p Galois representation.

    ``kind`` is ``"reducible-split"`` for the niveau-f shape
    ``omega_f^(sum (r_j+1) p^j) (+) 1`` and ``"irreducible"`` for the
    niveau-2f shape.  The twist is carried along but not used.
    """

    r_digits: tuple[int, ...]
    kind: str = REDUCIBLE
    twist: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "r_digits", tuple(int(r) for r in self.r_digits))


def is_inertial_generic(rho: InertialData, n: int, P: Params) -> bool:
    """n-genericity of inertial data, with bounds keyed to the matrix shape.

    ``kind`` names the niveau, never a printed case label: the niveau-f shape
    uses ``n <= r_j <= p-3-n`` and excludes the two constant vectors 0 and
    p-3, the niveau-2f shape uses ``n+1 <= r_0 <= p-2-n`` for the first digit.
    """
    if n < 0:
        raise PreconditionError(f"genericity level must be >= 0, got {n}")
    r = rho.r_digits
    if len(r) != P.f:
        raise ValidationError(f"inertial data has {len(r)} digits, expected f = {P.f}")
    p = P.p
    if rho.kind == REDUCIBLE:
        if r in ((0,) * P.f, (p - 3,) * P.f):
            return False
        return all(n <= x <= p - 3 - n for x in r)
    return n + 1 <= r[0] <= p - 2 - n and all(n <= x <= p - 3 - n for x in r[1:])


def global_window(P: Params, kind: str = REDUCIBLE) -> dict[str, tuple[int, int]]:
    """Closed digit ranges demanded of the global Galois representation.

    For the split shape the bounds are strict, ``max(12, 2f+1) < r_j <
    p - max(15, 2f+4)``; for the niveau-2f shape they are inclusive and the
    first digit has its own range.  Returned as inclusive ``(lo, hi)`` pairs
    under keys ``"r0"`` and ``"rj"``.
    """
    f, p = P.f, P.p
    if kind == REDUCIBLE:
        lo, hi = max(12, 2 * f + 1) + 1, p - max(15, 2 * f + 4) - 1
        return {"r0": (lo, hi), "rj": (lo, hi)}
    if kind == IRREDUCIBLE:
        return {
            "r0": (max(13, 2 * f + 2), p - max(14, 2 * f + 3)),
            "rj": (max(12, 2 * f + 1), p - max(15, 2 * f + 4)),
        }
    raise ValidationError(f"kind must be one of {KINDS}, got {kind!r}")


def is_globally_generic(rho: InertialData, P: Params) -> bool:
    win = global_window(P, rho.kind)
    r = rho.r_digits
    if len(r) != P.f:
        raise ValidationError(f"inertial data has {len(r)} digits, expected f = {P.f}")
    lo0, hi0 = win["r0"]
    lo, hi = win["rj"]
    return lo0 <= r[0] <= hi0 and all(lo <= x <= hi for x in r[1:])


class Result(str, Enum):
    """Results carrying a genericity hypothesis, named by what they establish."""

    GRADED_STRUCTURE = "graded-structure"
    DIMENSION_EQUALS_SOCLE = "dimension-equals-socle"
    SOCLE_GENERATION = "socle-generation"
    PRINCIPAL_SERIES_SPLIT = "principal-series-split"
    COHEN_MACAULAY = "cohen-macaulay"
    FINITE_LENGTH = "finite-length"
    LATTICE_MODEL = "lattice-model"
    TORSION_EXACTNESS = "torsion-exactness"
    K1_TORSION_STRUCTURE = "k1-torsion-structure"
    SOCLE_EXACTNESS = "socle-exactness"
    K1_INVARIANTS_EXACTNESS = "k1-invariants-exactness"
    SUBQUOTIENT_STRUCTURE = "subquotient-structure"
    SUPERSINGULAR_CONSTITUENTS = "supersingular-constituents"
    GLOBAL_FINITE_LENGTH = "global-finite-length"
    GLOBAL_HYPOTHESES = "global-hypotheses"


_TWO_F = {Result.DIMENSION_EQUALS_SOCLE, Result.SOCLE_GENERATION, Result.PRINCIPAL_SERIES_SPLIT}
_NINE_OR_2F1 = {
    Result.COHEN_MACAULAY,
    Result.FINITE_LENGTH,
    Result.LATTICE_MODEL,
    Result.TORSION_EXACTNESS,
    Result.K1_TORSION_STRUCTURE,
    Result.SOCLE_EXACTNESS,
    Result.K1_INVARIANTS_EXACTNESS,
    Result.SUBQUOTIENT_STRUCTURE,
    Result.SUPERSINGULAR_CONSTITUENTS,
}


def required_genericity(result: Result | str, P: Params | int) -> int:
    """Genericity level ``n`` that a result assumes, for the given ``f``."""
    try:
        result = Result(result)
    except ValueError:
        raise LookupError(f"unknown result id: {result!r}") from None
    f = P if isinstance(P, int) else P.f
    if result is Result.GRADED_STRUCTURE:
        return 9
    if result in _TWO_F:
        return 2 * f
    if result in _NINE_OR_2F1:
        return max(9, 2 * f + 1)
    if result is Result.GLOBAL_FINITE_LENGTH:
        return max(12, 2 * f + 1)
    if result is Result.GLOBAL_HYPOTHESES:
        return 12
    raise LookupError(f"no threshold recorded for {result.value}")  # pragma: no cover
