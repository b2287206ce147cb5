"""``gl2modp`` command line: one JSON report per invocation on stdout.

Exit status is 0 when every check passes, 1 for bad input, 2 when a
mathematical check fails.  The report layout is pinned by
``report_schema.json`` next to this file.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Any, Sequence

from . import charcycle as cc
from . import lattice as lt
from . import oracles
from . import verify as vf
from .diagram import (
    hypothesis_profile,
    jh_meets_weightset,
    jh_principal_series,
    length_zero_weight,
    serre_weights,
)
from .errors import Gl2ModpError, InvariantError
from .tuples import (
    AffineTuple,
    e_twist,
    identity_tuple,
    j_set,
    length,
    principal_series_tuples,
    weight_of_tuple,
    weight_set_tuples,
)
from .weights import (
    KINDS,
    REDUCIBLE,
    InertialData,
    Params,
    Result,
    char_of_weight,
    conj_s,
    count_generic_weights,
    global_window,
    is_globally_generic,
    is_inertial_generic,
    is_weight_generic,
    make_weight,
    required_genericity,
    weight_s,
    weights_with_character,
)

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which we reserve
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers separated by commas, got {text!r}")


def _weight_json(w) -> dict:
    return {"digits": list(w.digits), "twist": w.twist, "text": str(w)}


def _char_json(chi) -> list[int]:
    return [chi.a_exp, chi.d_exp]


def _check(name: str, ok: bool, witness: Any = None) -> dict:
    return vf.Check(name, ok, witness).as_dict()


# ------------------------------------------------------------------ weights


def cmd_weights(a) -> tuple[dict, list]:
    if a.action == "thresholds":
        f = a.f
        table = {res.value: required_genericity(res, f) for res in Result}
        results: dict = {"thresholds": table}
        if a.p is not None:
            P = Params(a.p, f)
            results["global_window"] = {
                kind: {k: list(v) for k, v in global_window(P, kind).items()} for kind in KINDS
            }
            if a.digits is not None:
                rho = InertialData(tuple(a.digits), a.kind)
                results["globally_generic"] = is_globally_generic(rho, P)
        return results, []

    P = Params(a.p, a.f)
    if a.action == "generic":
        if a.inertial:
            rho = InertialData(tuple(a.digits), a.kind)
            return {"kind": a.kind, "n": a.n, "generic": is_inertial_generic(rho, a.n, P)}, []
        sigma = make_weight(a.digits, a.twist, P)
        results = {
            "n": a.n,
            "generic": is_weight_generic(sigma, a.n, P),
            "generic_weight_count": count_generic_weights(a.n, P),
        }
        return results, []

    sigma = make_weight(a.digits, a.twist, P)
    chi = char_of_weight(sigma, P)
    if a.action == "char":
        found = weights_with_character(chi, P)
        checks = [_check("weights.character_preimage_contains_weight", sigma in found)]
        return {"weight": _weight_json(sigma), "character": _char_json(chi)}, checks

    # action == "s"
    out = weight_s(sigma, P)
    out_chi = char_of_weight(out, P)
    checks = [
        _check("weights.weight_s_character_swapped", out_chi == conj_s(chi)),
        _check("weights.weight_s_involution", weight_s(out, P) == sigma),
    ]
    if P.p**P.f <= 50_000:
        brute = oracles.brute_weight_s(sigma, P)
        checks.append(
            _check("weights.weight_s_matches_search", brute == [out], [_weight_json(w) for w in brute])
        )
    results = {
        "weight": _weight_json(sigma),
        "character": _char_json(chi),
        "weight_s": _weight_json(out),
        "weight_s_character": _char_json(out_chi),
    }
    return results, checks


# ------------------------------------------------------------------- tuples


def _parse_tuple(tokens: Sequence[str], P: Params) -> AffineTuple:
    lam = AffineTuple.parse(tokens, P.p)
    if len(lam) != P.f:
        raise UsageError(f"tuple has {len(lam)} entries, f = {P.f}")
    return lam


def cmd_tuples(a) -> tuple[dict, list]:
    P = Params(a.p, a.f)
    p = P.p
    if a.action in ("list-D", "list-P"):
        lams = weight_set_tuples(P) if a.action == "list-D" else principal_series_tuples(P)
        brute = (
            oracles.brute_weight_set_tuples(P)
            if a.action == "list-D"
            else oracles.brute_principal_series_tuples(P)
        )
        rows = []
        for lam in lams:
            row = {"tuple": lam.tokens(p)}
            if a.action == "list-D":
                row["length"] = length(lam, P)
                row["j_set"] = sorted(j_set(lam, P))
            rows.append(row)
        checks = [
            _check("tuples.count_is_2_pow_f", len(lams) == 2**P.f, {"count": len(lams)}),
            _check("tuples.matches_candidate_filter", lams == brute),
        ]
        return {"tuples": rows}, checks
    if a.action == "intersection":
        common = sorted(set(weight_set_tuples(P)) & set(principal_series_tuples(P)))
        ok = common == [identity_tuple(P.f)]
        witness = [lam.tokens(p) for lam in common]
        return {"intersection": witness}, [_check("tuples.intersection_is_identity", ok, witness)]
    lam = _parse_tuple(a.tuple, P)
    if a.action == "e":
        return {"tuple": lam.tokens(p), "r": a.r, "e": e_twist(lam, a.r, P)}, []
    # action == "weight"
    w = weight_of_tuple(lam, a.r, P)
    return {"tuple": lam.tokens(p), "r": a.r, "weight": _weight_json(w)}, []


# ------------------------------------------------------------------ diagram


def cmd_diagram(a) -> tuple[dict, list]:
    if a.action == "profile":
        P = Params(a.p, a.f)
        H = hypothesis_profile(a.mult, P, a.kind)
        ok = H.ext_total == 4**P.f * a.mult and list(H.ext_dims) == list(H.ext_dims)[::-1]
        results = {
            "ext_dims": list(H.ext_dims),
            "ext_total": H.ext_total,
            "socle_length": H.socle_length,
            "weight_count": H.weight_count,
            "torsion_multiplicity": H.torsion_multiplicity,
        }
        return results, [_check("diagram.ext_dims_symmetric_total", ok)]
    P = Params(a.p, a.f)
    if a.action == "weights":
        W = serre_weights(InertialData(tuple(a.r)), P)
        rows = [
            {"tuple": lam.tokens(P.p), "length": ell, "weight": _weight_json(W.entries[lam])}
            for ell in sorted(W.by_length)
            for lam in W.by_length[ell]
        ]
        sizes = [len(W.by_length[ell]) for ell in range(P.f + 1)]
        chars = {char_of_weight(w, P) for w in W.weights()}
        checks = [
            _check("diagram.level_sizes_binomial", sizes == [comb(P.f, ell) for ell in range(P.f + 1)], {"sizes": sizes}),
            _check("diagram.distinct_characters", len(chars) == 2**P.f),
        ]
        return {"weights": rows}, checks
    # action == "jh"
    sigma0 = make_weight(a.digits, a.twist, P)
    jh = sorted(jh_principal_series(sigma0, P))
    results: dict = {"sigma0": _weight_json(sigma0), "constituents": [_weight_json(w) for w in jh]}
    checks = [_check("diagram.jh_count", len(jh) == 2**P.f and sigma0 in jh, {"count": len(jh)})]
    rho = InertialData(tuple(sigma0.digits))
    if is_inertial_generic(rho, 0, P):
        W = serre_weights(rho, P)
        if length_zero_weight(W) == make_weight(sigma0.digits, 0, P):
            # the weight set of the untwisted data has sigma0 (untwisted) at length 0
            base = make_weight(sigma0.digits, 0, P)
            meet = sorted(jh_meets_weightset(base, W, P))
            results["meets_weight_set"] = [_weight_json(w) for w in meet]
            checks.append(_check("diagram.jh_meets_weightset_singleton", meet == [base]))
    return results, checks


# ------------------------------------------------------------------ lattice


def _profile(a, dims_attr: str, spaces_attr: str, P: Params) -> lt.SubrepProfile:
    spaces = getattr(a, spaces_attr)
    if spaces is not None:
        try:
            data = json.loads(spaces)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--{spaces_attr.replace('_', '-')} is not valid JSON: {exc}")
        subs = tuple(lt.Subspace.span(basis, a.r, a.c) for basis in data)
    else:
        dims = getattr(a, dims_attr)
        if dims is None:
            raise UsageError(f"give --{dims_attr.replace('_', '-')} or --{spaces_attr.replace('_', '-')}")
        for d in dims:
            if not 0 <= d <= a.r:
                raise UsageError(f"dimension {d} outside [0, {a.r}]")
        subs = tuple(
            lt.Subspace.span([[int(i == j) for j in range(a.r)] for i in range(d)], a.r, a.c) for d in dims
        )
    return lt.SubrepProfile(a.kind, subs)


def _profile_json(prof: lt.SubrepProfile) -> dict:
    return {"kind": prof.kind, "dims": list(prof.dims), "bases": [[list(v) for v in S.basis] for S in prof.spaces]}


def cmd_lattice(a) -> tuple[dict, list]:
    P = Params(3, a.f)
    if a.action == "soc":
        prof = _profile(a, "dims", "spaces", P)
        results = {"profile": _profile_json(prof), "soc_length": lt.soc_length(prof, P)}
        checks = []
        if prof.kind == REDUCIBLE:
            m = cc.profile_p0_multiplicity(prof, P)
            checks.append(_check("charcycle.p0_mult_equals_socle", m == results["soc_length"]))
        return results, checks
    if a.action in ("bound", "quotient"):
        big = _profile(a, "dims2", "spaces2", P)
        small = _profile(a, "dims1", "spaces1", P)
        if a.action == "bound":
            return {"length_bound": lt.length_bound(big, small, P)}, []
        quot = lt.quotient_profile(big, small)
        results = {
            "quotient": _profile_json(quot),
            "soc_lengths": [lt.soc_length(small, P), lt.soc_length(quot, P), lt.soc_length(big, P)],
        }
        return results, [_check("lattice.socle_additivity", lt.socle_additivity_check(big, small, P))]
    if a.action == "chains":
        ok = lt.max_chain_check(P, a.r, a.c, trials=a.trials, kind=a.kind, seed=a.seed)
        full, zero = lt.full_profile(a.kind, a.r, P, a.c), lt.zero_profile(a.kind, a.r, P, a.c)
        return {"full_length_bound": lt.length_bound(full, zero, P)}, [_check("lattice.max_chain", ok)]
    # action == "ps-split"
    dec = lt.ps_decomposition(lt.full_profile(REDUCIBLE, a.r, P, a.c), P)
    results = {
        "pi0_multiplicity": dec.pi0_multiplicity,
        "pif_multiplicity": dec.pif_multiplicity,
        "remainder": _profile_json(dec.remainder),
        "remainder_length_bound": dec.remainder_length_bound,
        "remainder_socle_length": dec.remainder_socle_length,
    }
    ok = dec.remainder_length_bound == a.r * (a.f - 1) and dec.remainder_socle_length == a.r * (2**a.f - 2)
    return results, [_check("lattice.ps_split_counts", ok)]


# ------------------------------------------------------------------- cycles


def _ideal(text: str, f: int) -> cc.MonomialIdeal:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    gens = [cc.Monomial.parse(t, f) for t in text.split(",") if t.strip()]
    return cc.MonomialIdeal(gens)


def cmd_cycles(a) -> tuple[dict, list]:
    f = a.f
    if a.action == "primes":
        primes = cc.minimal_primes(f)
        return {"primes": [str(q) for q in primes], "p0": str(cc.p0(f))}, []
    if a.action == "mult":
        I = _ideal(a.ideal, f)
        primes = [cc.MinimalPrime.parse(a.prime)] if a.prime else cc.minimal_primes(f)
        for q in primes:
            if q.f != f:
                raise UsageError(f"prime {q} does not have f = {f}")
        mults = {str(q): cc.mult_at_prime(I, q) for q in primes}
        ok = all(cc.mult_at_prime(I, q) == oracles.saturation_mult(I, q) for q in primes)
        return {"ideal": str(I), "multiplicities": mults}, [_check("charcycle.mult_equals_saturation", ok)]
    # action == "cycle"
    summands = []
    for item in a.summand:
        ideal, _, k = item.rpartition(":")
        if not ideal:
            ideal, k = item, "1"
        try:
            count = int(k)
        except ValueError:
            raise UsageError(f"bad multiplicity in summand {item!r}")
        summands.append((_ideal(ideal, f), count))
    N = cc.ModuleSpec(tuple(summands))
    Z = cc.char_cycle(N, f)
    parts = [cc.char_cycle(cc.ModuleSpec(((I, k),)), f) for I, k in summands]
    total = cc.CycleVector.zero()
    for z in parts:
        total = total + z
    results = {
        "cycle": {str(q): k for q, k in Z.coeffs},
        "dense": Z.dense(f),
        "primes": [str(q) for q in cc.minimal_primes(f)],
    }
    checks = [
        _check("charcycle.additivity", total == Z),
        _check("charcycle.coefficient_bounds", all(0 <= k <= N.total_multiplicity for k in Z.dense(f))),
    ]
    return results, checks


# ------------------------------------------------------------------- verify


def cmd_verify(a) -> tuple[dict, list]:
    checks = [c.as_dict() for c in vf.run_verify(a.p_max, a.f_max, a.seed, a.samples)]
    failed = [c["name"] for c in checks if c["status"] == "fail"]
    return {"total": len(checks), "failed": failed}, checks


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gl2modp", description="Serre weights, diagrams and multiplicities for GL2 mod p.")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pf(sp, need_p=True):
        sp.add_argument("--p", type=int, required=need_p, default=None)
        sp.add_argument("--f", type=int, required=True)

    w = top.add_parser("weights").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("char", "s"):
        sp = w.add_parser(name)
        pf(sp)
        sp.add_argument("--digits", type=_int_list, required=True)
        sp.add_argument("--twist", type=int, default=0)
    sp = w.add_parser("generic")
    pf(sp)
    sp.add_argument("--digits", type=_int_list, required=True)
    sp.add_argument("--twist", type=int, default=0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--inertial", action="store_true", help="test digits as inertial data")
    sp.add_argument("--kind", choices=KINDS, default=REDUCIBLE)
    sp = w.add_parser("thresholds")
    pf(sp, need_p=False)
    sp.add_argument("--digits", type=_int_list, default=None)
    sp.add_argument("--kind", choices=KINDS, default=REDUCIBLE)

    t = top.add_parser("tuples").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("list-D", "list-P", "intersection"):
        pf(t.add_parser(name))
    for name in ("e", "weight"):
        sp = t.add_parser(name)
        pf(sp)
        sp.add_argument("--tuple", nargs="+", required=True, help="tokens such as x+0 P-2-x")
        sp.add_argument("--r", type=_int_list, required=True)

    d = top.add_parser("diagram").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = d.add_parser("weights")
    pf(sp)
    sp.add_argument("--r", type=_int_list, required=True)
    sp = d.add_parser("jh")
    pf(sp)
    sp.add_argument("--digits", type=_int_list, required=True)
    sp.add_argument("--twist", type=int, default=0)
    sp = d.add_parser("profile")
    pf(sp)
    sp.add_argument("--mult", type=int, required=True, help="multiplicity r")
    sp.add_argument("--kind", choices=KINDS, default=REDUCIBLE)

    lat = top.add_parser("lattice").add_subparsers(dest="action", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--f", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--c", type=int, default=lt.DEFAULT_FIELD)
        sp.add_argument("--kind", choices=KINDS, default=REDUCIBLE)

    sp = lat.add_parser("soc")
    common(sp)
    sp.add_argument("--dims", type=_int_list)
    sp.add_argument("--spaces", help="JSON list of bases, one per slot")
    for name in ("bound", "quotient"):
        sp = lat.add_parser(name)
        common(sp)
        sp.add_argument("--dims2", type=_int_list)
        sp.add_argument("--spaces2")
        sp.add_argument("--dims1", type=_int_list)
        sp.add_argument("--spaces1")
    sp = lat.add_parser("chains")
    common(sp)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp = lat.add_parser("ps-split")
    common(sp)

    cy = top.add_parser("cycles").add_subparsers(dest="action", required=True, parser_class=_Parser)
    cy.add_parser("primes").add_argument("--f", type=int, required=True)
    sp = cy.add_parser("mult")
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--ideal", required=True, help='generators like "y0^2*z1,z0"')
    sp.add_argument("--prime", default=None, help='like "(z0,y1)"; all primes if omitted')
    sp = cy.add_parser("cycle")
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--summand", action="append", required=True, help='"IDEAL:k", repeatable')

    v = top.add_parser("verify")
    v.add_argument("--p-max", type=int, default=31)
    v.add_argument("--f-max", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=20)
    return parser


HANDLERS = {
    "weights": cmd_weights,
    "tuples": cmd_tuples,
    "diagram": cmd_diagram,
    "lattice": cmd_lattice,
    "cycles": cmd_cycles,
    "verify": cmd_verify,
}


def _params(a) -> dict:
    skip = {"command", "action"}
    return {k: v for k, v in sorted(vars(a).items()) if k not in skip}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        a = build_parser().parse_args(argv)
    except UsageError:
        return EXIT_INVALID
    command = a.command + (f" {a.action}" if getattr(a, "action", None) else "")
    try:
        results, checks = HANDLERS[a.command](a)
        code = EXIT_OK if all(c["status"] == "pass" for c in checks) else EXIT_FAILED
    except InvariantError as exc:
        results, checks = {}, [_check("invariant", False, str(exc))]
        code = EXIT_FAILED
    except (Gl2ModpError, LookupError, UsageError) as exc:
        sys.stderr.write(f"gl2modp: error: {exc}\n")
        return EXIT_INVALID
    out.write(render({"command": command, "params": _params(a), "results": results, "checks": checks}))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
