"""Command-line entry point.

Exit codes: 0 success, 1 bad input, 2 invariant breach, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import higgs, weights, weyl
from .cohomology import diagrams
from .errors import DomainError, InvariantBreach, ResourceCapError

EXIT_INPUT, EXIT_BREACH, EXIT_CAP = 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would exit with 2, which is reserved for invariant breaches
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _parse_weight(text: str, n: int) -> weights.DominantWeight:
    try:
        coords = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise DomainError(f"weight must be comma-separated integers, got {text!r}") from None
    if len(coords) != n:
        raise DomainError(f"weight has {len(coords)} coordinates, expected n = {n}")
    return weights.DominantWeight(coords)


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return higgs.load_json(text)


def cmd_minuscule(args) -> tuple[dict, str]:
    lam = _parse_weight(args.weight, args.n)
    report: dict = {"n": args.n, "weight": list(lam.coords), "mode": args.mode}
    verdicts = []
    if args.mode in ("closed", "both"):
        roots = weights.even_descent_witness(lam)
        report["closed_form"] = roots is None
        report["closed_form_witness"] = None if roots is None else [list(r) for r in roots]
        verdicts.append(roots is None)
    if args.mode in ("oracle", "both"):
        bound = args.bound if args.bound is not None else weights.default_oracle_bound(lam)
        m = weights.even_minuscule_oracle_witness(lam, bound)
        report["oracle"] = m is None
        report["oracle_bound"] = bound
        report["oracle_witness"] = None if m is None else list(m)
        verdicts.append(m is None)
    if len(set(verdicts)) > 1:
        raise InvariantBreach(f"closed form and oracle disagree on {lam.coords}")
    report["even_minuscule"] = verdicts[0]
    return report, "even minuscule" if verdicts[0] else "not even minuscule"


def cmd_classify(args) -> tuple[dict, str]:
    delta = higgs.DivisorTuple.from_json(_read_json(args.file))
    report = higgs.classify(delta)
    if report.even_very_stable != higgs.classify_via_weights(delta):
        raise InvariantBreach("divisor and weight classifiers disagree on even very stability")
    if report.very_stable != higgs.very_stable_via_weights(delta):
        raise InvariantBreach("divisor and weight classifiers disagree on very stability")
    lines = [
        f"very stable: {_yes(report.very_stable)}",
        f"even very stable: {_yes(report.even_very_stable)}",
    ]
    lines += [
        f"witness: {w.kind} at {w.point} indices {','.join(map(str, w.indices))}"
        for w in report.witnesses
    ]
    return report.to_json(), "\n".join(lines)


def cmd_hecke(args) -> tuple[dict, str]:
    mu = higgs.WeightMap.from_json(_read_json(args.file))
    steps = higgs.hecke_path(mu)
    delta = higgs.replay_hecke(mu.n, steps)
    if delta != higgs.delta_from_mu(mu):
        raise InvariantBreach("replayed Hecke path does not reproduce the divisor tuple")
    report = {
        "steps": [[s.point, s.index, s.power] for s in steps],
        "delta": delta.to_json(),
    }
    lines = [f"{len(steps)} elementary modifications"]
    lines += [f"  {s.point} index {s.index}" + (" inverse" if s.power < 0 else "") for s in steps]
    lines.append(f"delta: {json.dumps(delta.to_json())}")
    return report, "\n".join(lines)


def cmd_poincare(args) -> tuple[dict, str]:
    pair = weyl.parse_pair(args.pair)
    poly = weyl.poincare_polynomial(pair)
    euler, sig = weyl.euler_characteristic(pair), weyl.signature(pair)
    if euler != weyl.weyl_ratio(pair):
        raise InvariantBreach(f"P(1) = {euler} differs from the Weyl group ratio")
    report = {
        "pair": str(pair),
        "coefficients": list(poly.coefficients),
        "euler_characteristic": euler,
        "signature": sig,
    }
    return report, f"P(q) = {poly}\neuler characteristic: {euler}\nsignature: {sig}"


def cmd_multiplicity(args) -> tuple[dict, str]:
    if args.even:
        value = higgs.even_hitchin_multiplicity(args.n, args.k)
    else:
        value = higgs.hitchin_multiplicity(args.n, args.k)
    return {"n": args.n, "k": args.k, "even": args.even, "multiplicity": value}, str(value)


def _case_from_args(args) -> diagrams.DiagramCase:
    arity = diagrams._ARITY.get(args.case)
    if arity is None:
        raise DomainError(f"unknown case {args.case!r}; expected one of {diagrams.CASES}")
    given = [v for v in (args.n, args.k) if v is not None]
    if len(given) != arity or (arity == 1 and args.n is None):
        raise DomainError(f"case {args.case} takes {['no', '--n', '--n and --k'][arity]} parameters")
    return diagrams.DiagramCase(args.case, tuple(given))


def _verify_one(case: diagrams.DiagramCase, degree: int) -> dict:
    return diagrams.verify_diagram(case, oracle_degree=degree)


def _verify_line(r: dict) -> str:
    name = r["case"] + (f"({','.join(map(str, r['params']))})" if r["params"] else "")
    failed = [k for k, v in r["checks"].items() if not v]
    tail = f" FAILED {','.join(failed)}" if failed else ""
    oracle = f" oracle<={r['oracle_checked_to_degree']}" if r["oracle_checked_to_degree"] else ""
    return (
        f"{name}: equal={str(r['equal']).lower()} rank={r['rank']} "
        f"signature={r['signature']}{oracle} [{r['status']}]{tail}"
    )


def cmd_verify(args) -> tuple[object, str]:
    if args.degree < 0:
        raise DomainError("--degree must be nonnegative")
    if args.all:
        if args.case is not None:
            raise DomainError("--all and --case are exclusive")
        cases = diagrams.default_cases()
    elif args.case is None:
        raise DomainError("give --case or --all")
    else:
        cases = [_case_from_args(args)]
    if args.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, cases, [args.degree] * len(cases)))
    else:
        reports = [_verify_one(c, args.degree) for c in cases]
    bad = [r for r in reports if not r["ok"]]
    text = "\n".join(_verify_line(r) for r in reports)
    payload = reports[0] if len(reports) == 1 and not args.all else reports
    if bad:
        # still show what was computed before signalling the breach
        _emit(payload, text, args.output)
        raise InvariantBreach(f"{len(bad)} diagram case(s) failed verification")
    return payload, text


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")

    parser = _Parser(prog="evenflows", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("minuscule", parents=[common], help="even minuscule test for a dominant weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True, help="comma-separated coordinates lambda_1..lambda_n")
    p.add_argument("--mode", choices=("closed", "oracle", "both"), default="closed")
    p.add_argument("--bound", type=int, default=None, help="oracle search bound")
    p.set_defaults(func=cmd_minuscule)

    p = sub.add_parser("classify", parents=[common], help="classify a divisor tuple (JSON file, - for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hecke", parents=[common], help="Hecke path of a weight map (JSON file)")
    p.add_argument("file")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("poincare", parents=[common], help="Poincare polynomial of G/H, e.g. GL4/GL2xGL2")
    p.add_argument("pair")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("multiplicity", parents=[common], help="Hitchin map multiplicity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--even", action="store_true", help="even upward flow (n, k even)")
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("verify", parents=[common], help="verify a coinvariant diagram")
    p.add_argument("--case", choices=diagrams.CASES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--degree", type=int, default=10, help="oracle degree")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(payload, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        payload, text = args.func(args)
    except (_UsageError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantBreach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    _emit(payload, text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
