"""Multiplicities and characteristic cycles over ``F[y_i, z_i] / (y_i z_i)``.

The ring has ``2^f`` minimal primes, each generated by one variable per index
(``y_i`` or ``z_i``).  Localising at a prime inverts the other variable at
every index, which kills the selected ones, so the local ring is a field and a
cyclic module ``R/I`` with ``I`` monomial has multiplicity 0 or 1 there.

The graded ring of the Iwasawa algebra has further generators ``h_i`` with
``[y_i, z_i] = h_i``; modules handled here are assumed to have been brought
to layers killed by the ``h_i`` and the ``y_i z_i``, so the ``h_i`` never
appear as computing objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import InvariantError, NegativeCoefficientError, PreconditionError, ValidationError
from .lattice import SubrepProfile, soc_length
from .tuples import AffineTuple, length, weight_set_tuples
from .weights import REDUCIBLE, Params


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponents ``(a_0..a_{f-1}, b_0..b_{f-1})`` of ``prod y_i^a_i z_i^b_i``."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(int(x) for x in self.exponents)
        object.__setattr__(self, "exponents", e)
        if len(e) % 2:
            raise ValidationError("a monomial needs 2f exponents")
        if any(x < 0 for x in e):
            raise ValidationError(f"negative exponent in {e}")
        f = len(e) // 2
        for i in range(f):
            if e[i] and e[f + i]:
                raise ValidationError(f"monomial {self} contains y_{i} z_{i}, which is zero")

    @classmethod
    def from_yz(cls, y: Sequence[int], z: Sequence[int]) -> "Monomial":
        if len(y) != len(z):
            raise ValidationError("y and z exponent vectors differ in length")
        return cls(tuple(y) + tuple(z))

    @classmethod
    def parse(cls, text: str, f: int) -> "Monomial":
        """``"1"``, ``"y0"``, ``"y0^2*z1"``."""
        e = [0] * (2 * f)
        text = text.replace(" ", "")
        if text not in ("", "1"):
            for factor in text.split("*"):
                base, _, power = factor.partition("^")
                if len(base) < 2 or base[0] not in "yz" or not base[1:].isdigit():
                    raise ValidationError(f"cannot parse factor {factor!r}")
                i = int(base[1:])
                if i >= f:
                    raise ValidationError(f"variable {base} out of range for f = {f}")
                e[i + (f if base[0] == "z" else 0)] += int(power or 1)
        return cls(tuple(e))

    @property
    def f(self) -> int:
        return len(self.exponents) // 2

    @property
    def y(self) -> tuple[int, ...]:
        return self.exponents[: self.f]

    @property
    def z(self) -> tuple[int, ...]:
        return self.exponents[self.f :]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def is_one(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        parts = []
        for name, exps in (("y", self.y), ("z", self.z)):
            for i, a in enumerate(exps):
                if a:
                    parts.append(f"{name}{i}" + (f"^{a}" if a > 1 else ""))
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal kept as its minimal generating set."""

    generators: frozenset[Monomial]

    def __init__(self, generators: Iterable[Monomial]):
        gens = sorted(set(generators))
        if len({g.f for g in gens}) > 1:
            raise ValidationError("generators live in rings with different f")
        minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
        object.__setattr__(self, "generators", frozenset(minimal))

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in sorted(self.generators)) + ")"


@dataclass(frozen=True, order=True)
class MinimalPrime:
    """One variable per index: ``selection[i]`` is ``"y"`` or ``"z"``."""

    selection: tuple[str, ...]

    def __post_init__(self) -> None:
        if any(s not in ("y", "z") for s in self.selection):
            raise ValidationError(f"selection must use 'y'/'z', got {self.selection}")

    @property
    def f(self) -> int:
        return len(self.selection)

    def is_p0(self) -> bool:
        return all(s == "z" for s in self.selection)

    def selects(self, var: str, i: int) -> bool:
        return self.selection[i] == var

    def __str__(self) -> str:
        return "(" + ",".join(f"{s}{i}" for i, s in enumerate(self.selection)) + ")"

    @classmethod
    def parse(cls, text: str) -> "MinimalPrime":
        body = text.strip().strip("()")
        names = [t.strip() for t in body.split(",") if t.strip()]
        sel = []
        for i, name in enumerate(names):
            if name != f"y{i}" and name != f"z{i}":
                raise ValidationError(f"prime generators must be y{i} or z{i}, got {name!r}")
            sel.append(name[0])
        return cls(tuple(sel))


def minimal_primes(P: Params | int) -> list[MinimalPrime]:
    f = P if isinstance(P, int) else P.f
    return [MinimalPrime(sel) for sel in product("yz", repeat=f)]


def p0(P: Params | int) -> MinimalPrime:
    f = P if isinstance(P, int) else P.f
    return MinimalPrime(("z",) * f)


def mult_at_prime(I: MonomialIdeal, q: MinimalPrime) -> int:
    """Length of ``(R/I)_q``: 1 iff every generator lies in ``q``."""
    if I.is_unit():
        raise PreconditionError("R/I is zero: the ideal contains 1")
    for g in I.generators:
        if g.f != q.f:
            raise ValidationError(f"generator {g} has f = {g.f}, prime has f = {q.f}")
    in_q = all(
        any((g.y[i] and q.selects("y", i)) or (g.z[i] and q.selects("z", i)) for i in range(q.f))
        for g in I.generators
    )
    return int(in_q)


@dataclass(frozen=True)
class CycleVector:
    """Nonnegative integer combination of the minimal primes."""

    coeffs: tuple[tuple[MinimalPrime, int], ...]

    def __init__(self, coeffs: Mapping[MinimalPrime, int] | Iterable[tuple[MinimalPrime, int]] = ()):
        items = dict(coeffs)
        for q, k in items.items():
            if k < 0:
                raise NegativeCoefficientError(f"negative coefficient {k} at {q}")
        object.__setattr__(
            self, "coeffs", tuple(sorted((q, int(k)) for q, k in items.items() if k))
        )

    @classmethod
    def zero(cls) -> "CycleVector":
        return cls()

    def __getitem__(self, q: MinimalPrime) -> int:
        return dict(self.coeffs).get(q, 0)

    def __add__(self, other: "CycleVector") -> "CycleVector":
        out = dict(self.coeffs)
        for q, k in other.coeffs:
            out[q] = out.get(q, 0) + k
        return CycleVector(out)

    def __sub__(self, other: "CycleVector") -> "CycleVector":
        out = dict(self.coeffs)
        for q, k in other.coeffs:
            left = out.get(q, 0) - k
            if left < 0:
                raise NegativeCoefficientError(
                    f"cycle subtraction goes negative at {q}: {out.get(q, 0)} - {k}"
                )
            out[q] = left
        return CycleVector(out)

    def dense(self, P: Params | int) -> list[int]:
        return [self[q] for q in minimal_primes(P)]

    def __str__(self) -> str:
        return " + ".join(f"{k}*{q}" for q, k in self.coeffs) or "0"


cycle_add = CycleVector.__add__
cycle_sub = CycleVector.__sub__


@dataclass(frozen=True)
class ModuleSpec:
    """Direct sum of cyclic modules ``(R/I)^k``, or a stack of layers.

    When ``layers`` is given the module is described by the successive
    quotients of a filtration and ``summands`` is ignored.  ``label`` carries
    gradings or torus twists; multiplicities ignore it.
    """

    summands: tuple[tuple[MonomialIdeal, int], ...] = ()
    layers: tuple["ModuleSpec", ...] | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for I, k in self.summands:
            if not isinstance(k, int) or k < 1:
                raise ValidationError(f"summand multiplicity must be >= 1, got {k}")

    def __add__(self, other: "ModuleSpec") -> "ModuleSpec":
        """Direct sum."""
        if self.layers is None and other.layers is None:
            return ModuleSpec(self.summands + other.summands)
        return ModuleSpec(layers=(self, other))

    @property
    def total_multiplicity(self) -> int:
        if self.layers is not None:
            return sum(layer.total_multiplicity for layer in self.layers)
        return sum(k for _, k in self.summands)


def char_cycle(N: ModuleSpec, P: Params | int) -> CycleVector:
    primes = minimal_primes(P)
    if N.layers is not None:
        total = CycleVector.zero()
        for layer in N.layers:
            total = total + char_cycle(layer, P)
        return total
    return CycleVector(
        {q: sum(k * mult_at_prime(I, q) for I, k in N.summands) for q in primes}
    )


def p0_multiplicity_of_tuple(lam: AffineTuple, P: Params) -> int:
    """Multiplicity at ``p0`` of the cyclic module attached to a tuple.

    Known values only: 1 on the weight-set tuples, 0 on the other tuples
    parametrising eigencharacters.  The ideals themselves are not built.
    """
    return int(lam in set(weight_set_tuples(P)))


def profile_p0_multiplicity(prof: SubrepProfile, P: Params) -> int:
    """``m_p0`` of the graded dual of a subrepresentation with this profile.

    Sums ``dim V(l)`` times the number of length-``l`` tuples with multiplicity
    1 at ``p0``, then cross-checks against the socle length.
    """
    if prof.kind != REDUCIBLE:
        raise PreconditionError("p0-multiplicity from tuple data needs a reducible split profile")
    if len(prof.spaces) != P.f + 1:
        raise ValidationError(f"profile for f = {P.f} needs {P.f + 1} subspaces")
    per_length = [0] * (P.f + 1)
    for lam in weight_set_tuples(P):
        per_length[length(lam, P)] += p0_multiplicity_of_tuple(lam, P)
    m = sum(S.dim * per_length[ell] for ell, S in enumerate(prof.spaces))
    soc = soc_length(prof, P)
    if m != soc:
        raise InvariantError(f"p0-multiplicity {m} differs from socle length {soc}")
    return m
