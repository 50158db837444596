"""Command-line front end: construct, verify, classify, restrict, info.

Machine-readable JSON goes to stdout, human summaries to stderr.  Exit
codes: 0 success (verify: pass), 1 verification failure, 2 parameter
errors, 3 resource-budget errors.  Identical inputs produce byte-identical
outputs; nothing here consults the environment or a clock.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import classify_tower, verify_spread
from .errors import ParameterError, ResourceError
from .fields import DEFAULT_MAX_DEGREE, TowerSpec, make_context
from .forms import form_context
from .serial import (classification_to_json, context_to_json, dumps,
                     element_to_hex, report_to_json, spread_from_json,
                     spread_to_json)
from .spreads import SpreadParams, default_chain, orbit_spread, restrict_spread


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ParameterError(f"could not parse {what} {text!r} as "
                             f"comma-separated integers") from None


def _emit(payload: dict, out_path: str | None) -> None:
    text = dumps(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _resolve_tower(args):
    if args.chain:
        chain = _parse_ints(args.chain, "--chain")
        m = chain[0]
        if args.m is not None and args.m != m:
            raise ParameterError(f"--m {args.m} conflicts with --chain "
                                 f"starting at {m}")
    elif args.m is not None:
        m = args.m
        chain = default_chain(m)
    else:
        raise ParameterError("one of --m or --chain is required")
    ctx = make_context(args.e, m, args.max_degree)
    return TowerSpec(ctx, chain)


def _cmd_construct(args) -> int:
    tower = _resolve_tower(args)
    zetas = _parse_ints(args.zetas, "--zetas") if args.zetas else ()
    params = SpreadParams(tower, zetas, args.kind)
    spread = orbit_spread(params)
    payload = spread_to_json(spread)
    _emit(payload, args.out)
    _say(f"constructed {args.kind} spread: {len(spread.members)} members of "
         f"dimension {spread.members[0].dim} over GF({tower.ctx.q})"
         + (f", written to {args.out}" if args.out else ""))
    return 0


def _cmd_verify(args) -> int:
    with open(args.infile) as fh:
        data = json.load(fh)
    spread = spread_from_json(data, args.max_degree)
    ctx = spread.members[0].frame.ctx
    fc = form_context(ctx)
    report = verify_spread(fc, spread, mode=args.mode)
    _emit(report_to_json(report), args.out)
    _say(f"verify ({args.mode}): {'PASS' if report.passed else 'FAIL'} — "
         f"{report.member_count} members, covered {report.covered} / "
         f"expected {report.expected}")
    return 0 if report.passed else 1


def _cmd_classify(args) -> int:
    tower = _resolve_tower(args)
    result = classify_tower(tower)
    _emit(classification_to_json(result), args.out)
    _say(f"classified chain {tower.chain}: {result.class_count} classes from "
         f"{result.tuple_count} tuples, bound "
         f"{result.bound.numerator}/{result.bound.denominator}")
    return 0


def _cmd_restrict(args) -> int:
    with open(args.infile) as fh:
        data = json.load(fh)
    spread = spread_from_json(data, args.max_degree)
    ctx = spread.members[0].frame.ctx
    fc = form_context(ctx)
    report = verify_spread(fc, spread, mode=args.mode)
    if not report.passed:
        _say("restrict: input spread failed verification; refusing to restrict")
        return 1
    restricted = restrict_spread(fc, spread)
    _emit(spread_to_json(restricted), args.out)
    _say(f"restricted {len(spread.members)} symplectic members to "
         f"{len(restricted.members)} elliptic members"
         + (f", written to {args.out}" if args.out else ""))
    return 0


def _cmd_info(args) -> int:
    ctx = make_context(args.e, args.m, args.max_degree)
    qm = 1 << (ctx.e * ctx.m)
    payload = {
        **context_to_json(ctx),
        "D": ctx.D,
        "theta0_exponent": qm - 1,
        "circle_order": qm + 1,
        "theta0_hex": element_to_hex(ctx.circle_generator(), ctx.D),
        "subfield_degrees": [d for d in range(1, ctx.D + 1) if ctx.D % d == 0],
    }
    _emit(payload, args.out)
    _say(f"GF(2^{ctx.D}) = GF({ctx.q}^{2 * ctx.m}), modulus "
         f"{payload['modulus_hex']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towerspread",
        description="Construct, verify, restrict and classify cyclic spreads "
                    "over characteristic-2 field towers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tower=False, infile=False, kind=False, mode=False):
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                       help="largest permitted field degree over GF(2)")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        if tower:
            p.add_argument("--e", type=int, required=True, help="q = 2^e")
            p.add_argument("--m", type=int, default=None,
                           help="odd tower height (default: from --chain)")
            p.add_argument("--chain", default=None,
                           help="divisor chain, e.g. 9,3,1 (default: from the "
                                "prime factorization of m)")
        if kind:
            p.add_argument("--zetas", default=None,
                           help="comma-separated zeta exponents")
            p.add_argument("--kind", choices=("elliptic", "symplectic"),
                           required=True)
        if infile:
            p.add_argument("--in", dest="infile", required=True,
                           help="spread file to read")
        if mode:
            p.add_argument("--mode", choices=("counting", "exhaustive"),
                           default="counting")

    p = sub.add_parser("construct", help="build a spread and write its file")
    common(p, tower=True, kind=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check the spread axioms on a file")
    common(p, infile=True, mode=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="count spread classes for a tower")
    common(p, tower=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("restrict", help="restrict a symplectic spread file "
                                        "to its elliptic spread")
    common(p, infile=True, mode=True)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("info", help="show context metadata for (e, m)")
    common(p)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_info)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        _say(f"parameter error: {exc}")
        return 2
    except ResourceError as exc:
        _say(f"resource error: {exc}")
        return 3


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
