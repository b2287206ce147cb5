"""Affine f-tuples and the two cyclic tuple sets.

An affine form is ``sign * x + offset``; with ``p`` fixed, offsets are plain
integers, so ``p-3-x`` is ``AffineForm(-1, p-3)``.  Both sets are built from
class words: each position carries class ``A`` (forms ``x + c``) or ``B``
(forms ``c - x``) and the exact form at position ``i`` is read off a table
indexed by the classes of positions ``i-1`` and ``i`` (cyclically).

* ``weight_set_tuples`` -- the set parametrising the weights of a reducible
  split representation; forms ``x, x+1, p-2-x, p-3-x``.
* ``principal_series_tuples`` -- the set parametrising constituents of a
  principal series; forms ``x, x-1, p-2-x, p-1-x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import ParityError, ValidationError
from .weights import Params, SerreWeight


@dataclass(frozen=True, order=True)
class AffineForm:
    sign: int
    offset: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValidationError(f"sign must be +1 or -1, got {self.sign}")

    def __call__(self, x: int) -> int:
        return self.sign * x + self.offset

    def token(self, p: int) -> str:
        """``x+1``, ``x-1``, ``P-3-x``: offsets of minus forms relative to ``p``."""
        if self.sign == 1:
            return f"x{self.offset:+d}"
        k = p - self.offset
        return f"P-{k}-x" if k >= 0 else f"P+{-k}-x"

    @classmethod
    def parse(cls, token: str, p: int) -> "AffineForm":
        t = token.replace(" ", "")
        m = re.fullmatch(r"x([+-]\d+)?", t)
        if m:
            return cls(1, int(m.group(1) or 0))
        m = re.fullmatch(r"P([+-]\d+)?-x", t)
        if m:
            return cls(-1, p + int(m.group(1) or 0))
        raise ValidationError(f"cannot parse affine form {token!r}")


@dataclass(frozen=True, order=True)
class AffineTuple:
    forms: tuple[AffineForm, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        # tuples key several caches; hash once
        object.__setattr__(self, "_hash", hash(self.forms))

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __getitem__(self, i: int) -> AffineForm:
        return self.forms[i]

    def tokens(self, p: int) -> list[str]:
        return [lam.token(p) for lam in self.forms]

    @classmethod
    def parse(cls, tokens: Sequence[str], p: int) -> "AffineTuple":
        return cls(tuple(AffineForm.parse(t, p) for t in tokens))


def identity_tuple(f: int) -> AffineTuple:
    return AffineTuple((AffineForm(1, 0),) * f)


def eval_tuple(lam: AffineTuple, r: Sequence[int]) -> tuple[int, ...]:
    if len(r) != len(lam):
        raise ValidationError(f"tuple has length {len(lam)} but r has length {len(r)}")
    return tuple(form(x) for form, x in zip(lam, r))


@dataclass(frozen=True)
class _Plan:
    """A tuple compiled against ``p``: digit map and the twist as a linear form.

    The twist numerator is ``sum 2 h_i r_i + const`` with ``h_i = p^i`` at
    minus forms and 0 elsewhere, so its parity is that of ``const`` alone.
    """

    signs: tuple[int, ...]
    offsets: tuple[int, ...]
    half: tuple[int, ...]
    const: int


@lru_cache(maxsize=8192)
def _plan(lam: AffineTuple, P: Params) -> _Plan:
    const = -sum(P.p**i * form.offset for i, form in enumerate(lam))
    if lam[len(lam) - 1].sign == -1:
        const += P.order
    return _Plan(
        tuple(form.sign for form in lam),
        tuple(form.offset for form in lam),
        tuple(P.p**i if form.sign == -1 else 0 for i, form in enumerate(lam)),
        const,
    )


def e_twist(lam: AffineTuple, r: Sequence[int], P: Params) -> int:
    """Determinant twist attached to ``lam`` at ``r``, reduced mod ``q-1``.

    Half of ``sum p^i (r_i - lam_i(r_i))``, plus ``q-1`` inside the bracket
    when the last form is a minus form.
    """
    return _twist(lam, _plan(lam, P), r, P)


def _twist(lam: AffineTuple, plan: _Plan, r: Sequence[int], P: Params) -> int:
    if len(r) != P.f or len(lam) != P.f:
        raise ValidationError(f"expected {P.f} forms and digits, got {len(lam)} and {len(r)}")
    if plan.const % 2:
        total = sum(2 * h * x for h, x in zip(plan.half, r)) + plan.const
        raise ParityError(f"twist numerator {total} is odd for {lam.tokens(P.p)} at r={tuple(r)}")
    return (sum([h * x for h, x in zip(plan.half, r)]) + plan.const // 2) % P.order


def weight_of_tuple(lam: AffineTuple, r: Sequence[int], P: Params) -> SerreWeight:
    plan = _plan(lam, P)
    digits = eval_tuple(lam, r)
    top = P.p - 1
    if min(digits) < 0 or max(digits) > top:
        i = next(i for i, d in enumerate(digits) if not 0 <= d <= top)
        raise ValidationError(
            f"digit {i}: {lam[i].token(P.p)} at x={r[i]} gives {digits[i]}, outside [0, {top}]"
        )
    # digits and twist are in range by construction
    return SerreWeight(digits, _twist(lam, plan, r, P))


@lru_cache(maxsize=256)
def _compiled(lams: tuple[AffineTuple, ...], P: Params):
    rows = []
    for lam in lams:
        plan = _plan(lam, P)
        if plan.const % 2 or len(lam) != P.f:
            return None  # let the per-tuple path raise
        rows.append((plan.signs, plan.offsets, plan.half, plan.const // 2))
    return tuple(rows)


def weights_of_tuples(lams: Sequence[AffineTuple], r: Sequence[int], P: Params) -> list[SerreWeight]:
    """``weight_of_tuple`` for several tuples at the same ``r``, in order."""
    rows = _compiled(tuple(lams), P)
    if rows is None or len(r) != P.f:
        return [weight_of_tuple(lam, r, P) for lam in lams]
    order, top = P.order, P.p - 1
    out = [
        SerreWeight(
            tuple([s * x + c for s, c, x in zip(signs, offsets, r)]),
            (sum([h * x for h, x in zip(half, r)]) + hc) % order,
        )
        for signs, offsets, half, hc in rows
    ]
    for w in out:
        if min(w.digits) < 0 or max(w.digits) > top:
            return [weight_of_tuple(lam, r, P) for lam in lams]  # raises, naming the index
    return out


# Form at position i given (class of i-1, class of i).  Offsets of minus forms
# are stored relative to p and resolved by _form.
_WEIGHT_TABLE = {
    ("A", "A"): (1, 0),    # x
    ("A", "B"): (-1, -2),  # p-2-x
    ("B", "A"): (1, 1),    # x+1
    ("B", "B"): (-1, -3),  # p-3-x
}
_PS_TABLE = {
    ("A", "A"): (1, 0),    # x
    ("A", "B"): (-1, -2),  # p-2-x
    ("B", "A"): (1, -1),   # x-1
    ("B", "B"): (-1, -1),  # p-1-x
}


def _form(entry: tuple[int, int], p: int) -> AffineForm:
    sign, c = entry
    return AffineForm(sign, c if sign == 1 else p + c)


def _from_class_words(table, P: Params) -> list[AffineTuple]:
    out = []
    for word in product("AB", repeat=P.f):
        forms = tuple(_form(table[word[i - 1], word[i]], P.p) for i in range(P.f))
        out.append(AffineTuple(forms))
    return sorted(out)


@lru_cache(maxsize=256)
def _weight_set(P: Params) -> tuple[AffineTuple, ...]:
    if P.f == 1:
        return tuple(sorted([identity_tuple(1), AffineTuple((AffineForm(-1, P.p - 3),))]))
    return tuple(_from_class_words(_WEIGHT_TABLE, P))


@lru_cache(maxsize=256)
def _principal_series(P: Params) -> tuple[AffineTuple, ...]:
    if P.f == 1:
        return tuple(sorted([identity_tuple(1), AffineTuple((AffineForm(-1, P.p - 1),))]))
    return tuple(_from_class_words(_PS_TABLE, P))


def weight_set_tuples(P: Params) -> list[AffineTuple]:
    """Tuples parametrising the weights of a reducible split representation."""
    return list(_weight_set(P))


def principal_series_tuples(P: Params) -> list[AffineTuple]:
    """Tuples parametrising the constituents of ``Ind_I^K chi``."""
    return list(_principal_series(P))


# aliases matching the operation names used in reports
enumerate_D = weight_set_tuples
enumerate_P_ind = principal_series_tuples


def j_set(lam: AffineTuple, P: Params) -> frozenset[int]:
    """Positions where the form is one of ``x+1``, ``x+2``, ``p-3-x``."""
    shifted = {AffineForm(1, 1), AffineForm(1, 2), AffineForm(-1, P.p - 3)}
    return frozenset(j for j, form in enumerate(lam) if form in shifted)


def length(lam: AffineTuple, P: Params) -> int:
    return len(j_set(lam, P))


def check_intersection(P: Params) -> bool:
    common = set(weight_set_tuples(P)) & set(principal_series_tuples(P))
    return common == {identity_tuple(P.f)}


def length_polynomial(f: int) -> list[int]:
    """Coefficients of ``sum_l |{lam : length(lam) = l}| t^l`` via a transfer matrix.

    States are the two classes; stepping into a position whose predecessor is
    ``B`` contributes a factor ``t``.  The trace of the f-th power counts closed
    class words, i.e. the tuples, graded by length.
    """
    # entries are polynomials in t as coefficient lists
    T = [[[1], [1]], [[0, 1], [0, 1]]]

    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def padd(a, b):
        n = max(len(a), len(b))
        return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]

    def mmul(X, Y):
        return [
            [padd(pmul(X[i][0], Y[0][j]), pmul(X[i][1], Y[1][j])) for j in range(2)]
            for i in range(2)
        ]

    M = [[[1], [0]], [[0], [1]]]
    for _ in range(f):
        M = mmul(M, T)
    trace = padd(M[0][0], M[1][1])
    return (trace + [0] * (f + 1))[: f + 1]
