"""
Command line front end.

Every subcommand prints exactly one JSON document on stdout (sweeps with
--lines additionally stream one JSON line per pair before it). Exit codes:
0 success, 1 property violated or precondition refused, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gl import jacobson_morozov, nilpotent_representative, orbit_partition
from .partitions import Partition, add, dominance_compare, not_dominated, union
from .spectrum import (
    AssumptionRefused, IsobaricDatum, arrange_columns, assumption_report,
    column_genericity, pipeline, unramified_levi_datum,
)
from .vanishing import BoundExceeded, cai_sweep, finite_oracle, finite_vanishing_sweep, weyl_check
from .whittaker import (
    WhittakerPair, block_neutral_element, character_support, is_neutral_pair,
    neutral_pair, nsu_formula, omega_radical, semi_whittaker,
)

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _datum(text: str) -> IsobaricDatum:
    try:
        return IsobaricDatum.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def cmd_top_orbit(args) -> int:
    data = _datum(args.data)
    try:
        cert = pipeline(data)
    except AssumptionRefused as e:
        print(f"refused: {e}", file=sys.stderr)
        _emit({"data": str(data), "refused": True, "assumption": assumption_report(data)})
        return EXIT_VIOLATED
    _emit(cert.to_json())
    return EXIT_OK


def cmd_arrange(args) -> int:
    data = _datum(args.data)
    arr = arrange_columns(data)
    generic, witness = column_genericity(arr)
    payload = {
        "data": str(data),
        "columns": arr.to_json(),
        "sizes": str(arr.sizes()),
        "top_orbit": str(data.top_orbit()),
        "genericity": {"pass": generic, "witness": None if witness is None else {
            "column": witness[0].name, "entries": [witness[1].cusp + 1, witness[2].cusp + 1]}},
        "assumption": assumption_report(data),
    }
    _emit(payload)
    return EXIT_OK


def cmd_assumption(args) -> int:
    data = _datum(args.data)
    report = assumption_report(data)
    _emit({"data": str(data), "assumption": report})
    return EXIT_OK if report["pass"] else EXIT_VIOLATED


def cmd_levi(args) -> int:
    _emit(unramified_levi_datum(_datum(args.data)).to_json())
    return EXIT_OK


def cmd_partition(args) -> int:
    p = _partition(args.partition)
    payload = {"partition": str(p), "n": p.n, "transpose": str(p.transpose()),
               "parts": p.to_json()}
    if args.add:
        payload["sum"] = str(add(p, _partition(args.add)))
    if args.union:
        payload["union"] = str(union([p, _partition(args.union)]))
    if args.compare:
        q = _partition(args.compare)
        if q.n != p.n:
            raise InputError(f"cannot compare partitions of {p.n} and {q.n}")
        flag, witness = not_dominated(p, q)
        payload["compare"] = {"other": str(q), "order": dominance_compare(p, q).value,
                              "not_dominated": flag, "witness": witness}
    _emit(payload)
    return EXIT_OK


def cmd_jm(args) -> int:
    lam = _partition(args.partition)
    u = nilpotent_representative(lam)
    triple = jacobson_morozov(u)
    ok = triple.relations_hold() and orbit_partition(u) == lam
    _emit({"partition": str(lam), "u": u.to_json(), "v": triple.v.to_json(),
           "s": triple.s.to_json(), "relations_hold": ok})
    return EXIT_OK if ok else EXIT_VIOLATED


def _pair_report(pair: WhittakerPair) -> dict:
    radical = omega_radical(pair)
    formula = nsu_formula(pair)
    return {
        "s": pair.s.to_json(),
        "u": pair.u.to_json(),
        "grading": pair.grading().to_json(),
        "neutral": is_neutral_pair(pair),
        "radical": radical.to_json(),
        "formula_agrees": radical.same_nsu(formula),
        "character": character_support(pair).to_json(),
    }


def cmd_whittaker_pair(args) -> int:
    lam = _partition(args.partition)
    if args.kind == "semi":
        pair, _ = semi_whittaker(lam)
    elif args.kind == "neutral":
        pair = neutral_pair(lam)
    else:
        pair = WhittakerPair(block_neutral_element(lam), nilpotent_representative(lam))
    payload = {"partition": str(lam), "kind": args.kind}
    payload.update(_pair_report(pair))
    _emit(payload)
    return EXIT_OK if payload["formula_agrees"] else EXIT_VIOLATED


def cmd_weyl_check(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if lam.n != mu.n:
        raise InputError("lambda and mu must have the same size")
    report = weyl_check(lam, mu, jobs=args.jobs)
    payload = report.to_json()
    payload["not_dominated"] = not_dominated(lam, mu)[0]
    _emit(payload)
    # only a prefix-violating pair that fails contradicts the criterion
    return EXIT_VIOLATED if payload["not_dominated"] and not report.all_pass else EXIT_OK


def cmd_verify_cai(args) -> int:
    summary = cai_sweep(args.n, jobs=args.jobs)
    if args.lines:
        for line in summary.lines:
            _emit(line)
    _emit(summary.to_json())
    return EXIT_OK if summary.ok else EXIT_VIOLATED


def cmd_finite_oracle(args) -> int:
    if (args.lam is None) != (args.mu is None):
        raise InputError("--lambda and --mu go together")
    if args.lam is None:
        summary = finite_vanishing_sweep(args.n, args.q, unipotent=args.unipotent)
        if args.lines:
            for line in summary.lines:
                _emit(line)
        _emit(summary.to_json())
        return EXIT_OK if summary.ok else EXIT_VIOLATED
    lam, mu = _partition(args.lam), _partition(args.mu)
    report = finite_oracle(args.n, args.q, lam, mu, unipotent=args.unipotent)
    payload = report.to_json(timing=args.timing)
    payload["not_dominated"] = not_dominated(lam, mu)[0]
    _emit(payload)
    if payload["not_dominated"] and report.hom_dim != 0 and args.unipotent == "full":
        return EXIT_VIOLATED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavefront",
        description="Top Fourier coefficient partitions for GL_n induced from Speh data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def data_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--data", required=True, help='records "a:b:s", comma separated')
        p.set_defaults(func=func)
        return p

    data_cmd("top-orbit", cmd_top_orbit, "top orbit certificate (refuses if the twist condition fails)")
    data_cmd("arrange", cmd_arrange, "column arrangement of the exponent data")
    data_cmd("assumption", cmd_assumption, "check the twist condition only")
    data_cmd("levi", cmd_levi, "parabolic P_{mu^t} and determinant-character slots")

    p = sub.add_parser("partition", help="transpose, sum, union and dominance")
    p.add_argument("partition")
    p.add_argument("--add")
    p.add_argument("--union")
    p.add_argument("--compare")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("jm", help="Jacobson-Morozov triple of the standard representative")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_jm)

    p = sub.add_parser("whittaker-pair", help="grading, n_{s,u} and character of a Whittaker pair")
    p.add_argument("--partition", required=True)
    p.add_argument("--kind", choices=["semi", "neutral", "block"], default="semi",
                   help="semi: (s_n, u_lambda); neutral: JM element; block: blockwise neutral s")
    p.set_defaults(func=cmd_whittaker_pair)

    p = sub.add_parser("weyl-check", help="permutation-level vanishing check for one pair")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_weyl_check)

    p = sub.add_parser("verify-cai", help="permutation-level check over all pairs of partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--lines", action="store_true", help="also stream one JSON line per pair")
    p.set_defaults(func=cmd_verify_cai)

    p = sub.add_parser("finite-oracle", help="double coset Hom dimension over F_q (sweep if no pair given)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--unipotent", choices=["full", "halved"], default="full")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--lines", action="store_true")
    p.set_defaults(func=cmd_finite_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BoundExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
