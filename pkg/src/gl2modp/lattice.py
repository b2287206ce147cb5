"""Subspace profiles over a small prime field.

A subrepresentation of a representation of multiplicity ``r`` is recorded by
subspaces of ``F^r``: one per length ``0..f`` in the reducible split case, a
single one in the irreducible case.  Everything here works over ``F_c`` for a
small prime ``c`` (default 3), independent of ``p``; only dimensions and
inclusions matter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from sympy.ntheory import isprime

from .errors import PreconditionError, ValidationError
from .weights import IRREDUCIBLE, KINDS, REDUCIBLE, Params

DEFAULT_FIELD = 3

Vector = tuple[int, ...]


def rref(rows: Iterable[Sequence[int]], ncols: int, c: int) -> tuple[Vector, ...]:
    """Reduced row-echelon form mod ``c`` with zero rows dropped."""
    work = [[x % c for x in row] for row in rows]
    for row in work:
        if len(row) != ncols:
            raise ValidationError(f"vector {row} does not have length {ncols}")
    out: list[list[int]] = []
    for col in range(ncols):
        pivot = next((i for i, row in enumerate(work) if row[col]), None)
        if pivot is None:
            continue
        prow = work.pop(pivot)
        inv = pow(prow[col], -1, c)
        prow = [x * inv % c for x in prow]
        for row in out + work:
            a = row[col]
            if a:
                row[:] = [(x - a * y) % c for x, y in zip(row, prow)]
        out.append(prow)
    return tuple(tuple(row) for row in out)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``F_c^ambient`` stored by its canonical RREF basis."""

    ambient: int
    basis: tuple[Vector, ...]
    c: int = DEFAULT_FIELD

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient: int, c: int = DEFAULT_FIELD) -> "Subspace":
        return cls(ambient, rref(vectors, ambient, c), c)

    @classmethod
    def zero(cls, ambient: int, c: int = DEFAULT_FIELD) -> "Subspace":
        return cls(ambient, (), c)

    @classmethod
    def full(cls, ambient: int, c: int = DEFAULT_FIELD) -> "Subspace":
        eye = [[int(i == j) for j in range(ambient)] for i in range(ambient)]
        return cls.span(eye, ambient, c)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _same_space(self, other: "Subspace") -> None:
        if (self.ambient, self.c) != (other.ambient, other.c):
            raise ValidationError(
                f"ambient mismatch: F_{self.c}^{self.ambient} vs F_{other.c}^{other.ambient}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_space(other)
        return Subspace.span(self.basis + other.basis, self.ambient, self.c)

    def __and__(self, other: "Subspace") -> "Subspace":
        # (A^perp + B^perp)^perp; perp is an involution on subspaces of F^n
        self._same_space(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def __le__(self, other: "Subspace") -> bool:
        self._same_space(other)
        return (self + other).dim == other.dim

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def contains(self, v: Sequence[int]) -> bool:
        return Subspace.span(self.basis + (tuple(v),), self.ambient, self.c).dim == self.dim

    def annihilator(self) -> "Subspace":
        """``{w : <v, w> = 0 for all v in self}`` for the standard pairing."""
        n, c = self.ambient, self.c
        pivots = [next(j for j, x in enumerate(row) if x) for row in self.basis]
        free = [j for j in range(n) if j not in pivots]
        null = []
        for fcol in free:
            w = [0] * n
            w[fcol] = 1
            for row, pc in zip(self.basis, pivots):
                w[pc] = -row[fcol] % c
            null.append(w)
        return Subspace.span(null, n, c)

    def complement_in(self, bigger: "Subspace") -> "Subspace":
        """Deterministic complement of ``self`` inside ``bigger``.

        Extends the basis of ``self`` greedily by the RREF rows of ``bigger``.
        """
        if not self <= bigger:
            raise PreconditionError("complement_in needs self <= bigger")
        current = self
        chosen: list[Vector] = []
        for v in bigger.basis:
            if not current.contains(v):
                chosen.append(v)
                current = Subspace.span(current.basis + (v,), self.ambient, self.c)
        return Subspace.span(chosen, self.ambient, self.c)

    def vectors(self) -> set[Vector]:
        """All ``c^dim`` elements (exhaustive; small cases only)."""
        out = set()
        for coeffs in product(range(self.c), repeat=self.dim):
            v = [0] * self.ambient
            for a, row in zip(coeffs, self.basis):
                for j, x in enumerate(row):
                    v[j] = (v[j] + a * x) % self.c
            out.add(tuple(v))
        return out


def subspace_algebra(A: Subspace, B: Subspace) -> dict:
    s, i = A + B, A & B
    return {"sum": s, "intersection": i, "dims": (A.dim, B.dim, s.dim, i.dim)}


def all_subspaces(ambient: int, c: int = DEFAULT_FIELD) -> list[Subspace]:
    """Every subspace of ``F_c^ambient``, enumerated via RREF shapes."""
    out = []
    for k in range(ambient + 1):
        for pivots in combinations(range(ambient), k):
            free_slots = [
                (i, j)
                for i, pc in enumerate(pivots)
                for j in range(pc + 1, ambient)
                if j not in pivots
            ]
            for vals in product(range(c), repeat=len(free_slots)):
                rows = [[0] * ambient for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), x in zip(free_slots, vals):
                    rows[i][j] = x
                out.append(Subspace(ambient, tuple(tuple(r) for r in rows), c))
    return out


def random_subspace(
    ambient: int,
    c: int,
    rng: random.Random,
    within: Subspace | None = None,
    containing: Subspace | None = None,
) -> Subspace:
    """Random subspace ``S`` with ``containing <= S <= within``."""
    top = within if within is not None else Subspace.full(ambient, c)
    bottom = containing if containing is not None else Subspace.zero(ambient, c)
    if not bottom <= top:
        raise PreconditionError("random_subspace: containing is not inside within")
    target = rng.randint(bottom.dim, top.dim)
    S = bottom
    while S.dim < target:
        coeffs = [rng.randrange(c) for _ in top.basis]
        v = [0] * ambient
        for a, row in zip(coeffs, top.basis):
            v = [(x + a * y) % c for x, y in zip(v, row)]
        S = S + Subspace.span([v], ambient, c)
    return S


@dataclass(frozen=True)
class SubrepProfile:
    kind: str
    spaces: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not self.spaces:
            raise ValidationError("a profile needs at least one subspace")
        if self.kind == IRREDUCIBLE and len(self.spaces) != 1:
            raise ValidationError("an irreducible profile has exactly one subspace")
        first = self.spaces[0]
        for S in self.spaces:
            if (S.ambient, S.c) != (first.ambient, first.c):
                raise ValidationError("all subspaces of a profile share one ambient space")

    @property
    def r(self) -> int:
        return self.spaces[0].ambient

    @property
    def c(self) -> int:
        return self.spaces[0].c

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(S.dim for S in self.spaces)

    def __le__(self, other: "SubrepProfile") -> bool:
        _compatible(self, other)
        return all(a <= b for a, b in zip(self.spaces, other.spaces))

    def __lt__(self, other: "SubrepProfile") -> bool:
        return self <= other and self != other


def _compatible(a: SubrepProfile, b: SubrepProfile) -> None:
    if a.kind != b.kind or len(a.spaces) != len(b.spaces):
        raise ValidationError("profiles of different shapes")
    if (a.r, a.c) != (b.r, b.c):
        raise ValidationError("profiles over different ambient spaces")


def _slots(kind: str, P: Params) -> int:
    return P.f + 1 if kind == REDUCIBLE else 1


def full_profile(kind: str, r: int, P: Params, c: int = DEFAULT_FIELD) -> SubrepProfile:
    _check_field(c)
    return SubrepProfile(kind, (Subspace.full(r, c),) * _slots(kind, P))


def zero_profile(kind: str, r: int, P: Params, c: int = DEFAULT_FIELD) -> SubrepProfile:
    _check_field(c)
    return SubrepProfile(kind, (Subspace.zero(r, c),) * _slots(kind, P))


def _check_field(c: int) -> None:
    if not isprime(c):
        raise ValidationError(f"coefficient field size must be prime, got {c}")


def _check_shape(prof: SubrepProfile, P: Params) -> None:
    if len(prof.spaces) != _slots(prof.kind, P):
        raise ValidationError(
            f"{prof.kind} profile for f = {P.f} needs {_slots(prof.kind, P)} subspaces, "
            f"got {len(prof.spaces)}"
        )


def soc_length(prof: SubrepProfile, P: Params) -> int:
    """Length of the K-socle of the subrepresentation with this profile."""
    _check_shape(prof, P)
    if prof.kind == REDUCIBLE:
        return sum(S.dim * comb(P.f, ell) for ell, S in enumerate(prof.spaces))
    return prof.spaces[0].dim * 2**P.f


# the (phi, Gamma)-module of a subrepresentation has this same dimension
dxi_dimension = soc_length


def _check_containment(prof2: SubrepProfile, prof1: SubrepProfile) -> None:
    _compatible(prof1, prof2)
    for ell, (a, b) in enumerate(zip(prof1.spaces, prof2.spaces)):
        if not a <= b:
            raise PreconditionError(f"containment fails at index {ell}")


def length_bound(prof2: SubrepProfile, prof1: SubrepProfile, P: Params) -> int:
    """Upper bound for the length of ``pi_2 / pi_1``."""
    _check_shape(prof2, P)
    _check_containment(prof2, prof1)
    return sum(b.dim - a.dim for a, b in zip(prof1.spaces, prof2.spaces))


def quotient_profile(prof2: SubrepProfile, prof1: SubrepProfile) -> SubrepProfile:
    _check_containment(prof2, prof1)
    return SubrepProfile(
        prof2.kind, tuple(a.complement_in(b) for a, b in zip(prof1.spaces, prof2.spaces))
    )


def socle_additivity_check(prof2: SubrepProfile, prof1: SubrepProfile, P: Params) -> bool:
    quot = quotient_profile(prof2, prof1)
    return soc_length(prof1, P) + soc_length(quot, P) == soc_length(prof2, P)


def random_profile(
    kind: str,
    r: int,
    P: Params,
    c: int,
    rng: random.Random,
    within: SubrepProfile | None = None,
) -> SubrepProfile:
    n = _slots(kind, P)
    tops = within.spaces if within is not None else (Subspace.full(r, c),) * n
    return SubrepProfile(kind, tuple(random_subspace(r, c, rng, within=t) for t in tops))


def random_nested_pair(
    kind: str, r: int, P: Params, c: int, rng: random.Random
) -> tuple[SubrepProfile, SubrepProfile]:
    """``(prof2, prof1)`` with ``prof1 <= prof2``."""
    prof2 = random_profile(kind, r, P, c, rng)
    return prof2, random_profile(kind, r, P, c, rng, within=prof2)


def interval(prof1: SubrepProfile, prof2: SubrepProfile) -> list[SubrepProfile]:
    """All profiles between ``prof1`` and ``prof2`` (exhaustive)."""
    _check_containment(prof2, prof1)
    every = all_subspaces(prof1.r, prof1.c)
    choices = [[S for S in every if a <= S <= b] for a, b in zip(prof1.spaces, prof2.spaces)]
    return [SubrepProfile(prof1.kind, tuple(sp)) for sp in product(*choices)]


def longest_chain(prof1: SubrepProfile, prof2: SubrepProfile) -> int:
    """Number of strict steps in a longest chain ``prof1 < ... < prof2``.

    Profiles are compared as tuples of explicit vector sets; the DP visits them
    in order of total cardinality, which strict inclusion increases.
    """
    nodes = interval(prof1, prof2)
    sets = [tuple(frozenset(S.vectors()) for S in prof.spaces) for prof in nodes]
    order = sorted(range(len(nodes)), key=lambda i: sum(len(s) for s in sets[i]))

    def below(i: int, j: int) -> bool:
        return sets[i] != sets[j] and all(a <= b for a, b in zip(sets[i], sets[j]))

    best = {}
    for pos, j in enumerate(order):
        best[j] = max((best[i] + 1 for i in order[:pos] if below(i, j)), default=0)
    top = next(j for j in order if sets[j] == tuple(frozenset(S.vectors()) for S in prof2.spaces))
    return best[top]


def random_chain(
    prof1: SubrepProfile, prof2: SubrepProfile, rng: random.Random, refine: bool = False
) -> list[SubrepProfile]:
    """A random strictly increasing chain from ``prof1`` to ``prof2``.

    With ``refine=True`` every step adds a single vector in a single slot.
    """
    _check_containment(prof2, prof1)
    chain = [prof1]
    cur = list(prof1.spaces)
    while tuple(cur) != prof2.spaces:
        open_slots = [i for i, (a, b) in enumerate(zip(cur, prof2.spaces)) if a.dim < b.dim]
        if refine:
            slots = [rng.choice(open_slots)]
        else:
            slots = [i for i in open_slots if rng.random() < 0.5] or [rng.choice(open_slots)]
        for i in slots:
            top = prof2.spaces[i]
            if refine:
                v = next(
                    vec
                    for vec in sorted(top.vectors(), key=lambda _: rng.random())
                    if not cur[i].contains(vec)
                )
                cur[i] = cur[i] + Subspace.span([v], top.ambient, top.c)
            else:
                bigger = random_subspace(top.ambient, top.c, rng, within=top, containing=cur[i])
                if bigger.dim == cur[i].dim:
                    bigger = cur[i] + Subspace.span(
                        [next(v for v in top.basis if not cur[i].contains(v))], top.ambient, top.c
                    )
                cur[i] = bigger
        chain.append(SubrepProfile(prof1.kind, tuple(cur)))
    return chain


def max_chain_check(
    P: Params,
    r: int,
    c: int = DEFAULT_FIELD,
    trials: int = 20,
    kind: str = REDUCIBLE,
    seed: int = 0,
    exhaustive_limit: int = 400,
) -> bool:
    """Chains of profiles never exceed ``length_bound`` and a chain attains it.

    Between zero and full profiles (and ``trials`` random nested pairs): when
    the interval has at most ``exhaustive_limit`` profiles the longest chain is
    found exhaustively, otherwise random chains (coarse and refined) are drawn.
    """
    _check_field(c)
    rng = random.Random(seed)
    pairs = [(full_profile(kind, r, P, c), zero_profile(kind, r, P, c))]
    pairs += [random_nested_pair(kind, r, P, c, rng) for _ in range(trials)]
    n_sub = len(all_subspaces(r, c)) if c**r <= 3**4 else None
    for prof2, prof1 in pairs:
        bound = length_bound(prof2, prof1, P)
        if n_sub is not None and n_sub ** len(prof1.spaces) <= exhaustive_limit:
            if longest_chain(prof1, prof2) != bound:
                return False
            continue
        for _ in range(3):
            if len(random_chain(prof1, prof2, rng)) - 1 > bound:
                return False
        if len(random_chain(prof1, prof2, rng, refine=True)) - 1 != bound:
            return False
    return True


@dataclass(frozen=True)
class PSDecomposition:
    r: int
    f: int
    pi0_multiplicity: int
    pif_multiplicity: int
    remainder: SubrepProfile
    remainder_length_bound: int
    remainder_socle_length: int


def ps_decomposition(full: SubrepProfile, P: Params) -> PSDecomposition:
    """Split the full profile into the two principal-series blocks and the rest.

    The blocks at lengths 0 and f each contribute ``r`` copies of an
    irreducible principal series; the remainder keeps lengths ``1..f-1``.
    """
    if full.kind != REDUCIBLE:
        raise PreconditionError("the principal-series split needs a reducible split profile")
    _check_shape(full, P)
    r, c = full.r, full.c
    if full != full_profile(REDUCIBLE, r, P, c):
        raise PreconditionError("the principal-series split needs the full profile")
    zero, whole = Subspace.zero(r, c), Subspace.full(r, c)
    rest = SubrepProfile(
        REDUCIBLE, tuple(zero if ell in (0, P.f) else whole for ell in range(P.f + 1))
    )
    return PSDecomposition(
        r=r,
        f=P.f,
        pi0_multiplicity=full.spaces[0].dim,
        pif_multiplicity=full.spaces[P.f].dim,
        remainder=rest,
        remainder_length_bound=length_bound(rest, zero_profile(REDUCIBLE, r, P, c), P),
        remainder_socle_length=soc_length(rest, P),
    )
