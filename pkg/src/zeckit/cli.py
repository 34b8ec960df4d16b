"""Command-line front end.

Every subcommand maps onto one library call and emits a report with fixed
keys ``command``, ``inputs``, ``result``, ``status``.  Exit codes: 0 ok,
1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog as cat
from .errors import ZeckitError
from .identities import (
    IdentityPattern,
    approx_terms,
    diophantine_check,
    discover,
    family_generate,
    power_sum,
    verify_numeric,
    verify_symbolic,
)
from .quadring import QuadInt, RingTag, binet_check, lucas_power_sum, ring_pow
from .recurrence import RecurrenceSpec, eval_at, get_family, tiling_of
from .tiling import Tiling, break_at, enumerate_tilings, six_pell_bijection
from .zeckendorf import Representation, decode, nega_encode, zeck_encode

OK, FAILED, ERRATUM = "ok", "failed", "erratum-detected"
EXIT = {OK: 0, FAILED: 1, ERRATUM: 0}


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _tiling_spec(args) -> RecurrenceSpec:
    if args.coeffs:
        return tiling_of(RecurrenceSpec(tuple(args.coeffs), (0,) * len(args.coeffs))).spec
    return tiling_of(get_family(args.family)).spec


# --- command handlers: each returns (result payload, status) -----------------


def cmd_eval(args):
    value = eval_at(get_family(args.family), args.n)
    return {"value": _num(value)}, OK


def cmd_encode(args):
    rep = zeck_encode(args.n) if args.kind == "zeckendorf" else nega_encode(args.n)
    return {"text": rep.to_text(), **rep.to_json()}, OK


def cmd_decode(args):
    rep = Representation.parse(args.rep, kind=args.kind)
    return {"value": decode(rep), **rep.to_json()}, OK


def cmd_verify(args):
    pattern = IdentityPattern(get_family(args.family), args.mult, tuple(args.offsets), args.min_n)
    lo = pattern.min_n if args.lo is None else args.lo
    hi = lo + cat.NUMERIC_SPAN if args.hi is None else args.hi
    result = {"identity": pattern.to_json(), "text": str(pattern)}
    holds = True
    if args.mode in ("symbolic", "both"):
        sym = verify_symbolic(pattern)
        result["symbolic"] = sym.to_json()
        holds &= sym.holds
    if args.mode in ("numeric", "both"):
        num = verify_numeric(pattern, lo, hi)
        result["numeric"] = num.to_json()
        holds &= num.holds
    result["holds"] = holds
    return result, OK if holds else FAILED


def cmd_discover(args):
    found = discover(get_family(args.family), args.mult, args.window, gap=args.gap)
    items = []
    for p in found:
        item = {"offsets": list(p.offsets), "min_n": p.min_n, "text": str(p),
                "symbolic_holds": verify_symbolic(p).holds}
        total = power_sum(p.family, p.offsets)
        item["ring_sum"] = {"a": total.a, "b": total.b}
        if args.approx:
            item["approx_terms"] = [round(v, 12) for v in approx_terms(p.family, p.offsets)]
        items.append(item)
    return {"count": len(items), "patterns": items}, OK if items else FAILED


def cmd_family(args):
    p = family_generate(get_family(args.family), args.r)
    sym = verify_symbolic(p)
    return {"identity": p.to_json(), "text": str(p), "symbolic": sym.to_json()}, OK if sym.holds else FAILED


def cmd_tile(args):
    spec = _tiling_spec(args)
    if args.action == "count":
        return {"spec": spec.to_json(), "n": args.n, "count": len(enumerate_tilings(spec, args.n))}, OK
    if args.action == "list":
        tilings = enumerate_tilings(spec, args.n)
        return {"spec": spec.to_json(), "n": args.n, "count": len(tilings),
                "tilings": [t.to_text() for t in tilings]}, OK
    if args.action == "break":
        if args.cell is None:
            raise UsageError("tile break needs --cell M")
        part = break_at(spec, args.n, args.cell)
        return {"spec": spec.to_json(), "n": args.n, "cell": args.cell,
                "breakable": len(part.breakable), "unbreakable": len(part.unbreakable)}, OK
    report = six_pell_bijection(args.n)
    return report.to_json(), OK if report.verified else FAILED


def cmd_ring(args):
    if args.action == "pow":
        ring = RingTag(args.ring)
        x = QuadInt(ring, args.a, args.b)
        y = ring_pow(x, args.r)
        return {"base": {"a": x.a, "b": x.b}, "r": args.r, "a": y.a, "b": y.b,
                **({"approx": y.approx()} if args.approx else {})}, OK
    if args.action == "lucas-sum":
        value, holds = lucas_power_sum(args.r, args.family, strict=not args.allow_odd)
        return {"family": args.family, "r": args.r, "value": value, "holds": holds}, OK if holds else FAILED
    holds = binet_check(args.r)
    return {"n": args.r, "holds": holds}, OK if holds else FAILED


def cmd_diophantine(args):
    holds = diophantine_check(args.kind, args.n)
    return {"kind": args.kind, "n": args.n, "holds": holds}, OK if holds else FAILED


def cmd_catalog(args):
    entries = cat.load_catalog(args.file)
    results = cat.check_catalog(entries)
    payload = {"entries": [r.to_json() for r in results]}
    statuses = {r.status for r in results}
    if cat.FAILED in statuses:
        return payload, FAILED
    return payload, ERRATUM if cat.ERRATUM in statuses else OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeckit", description="Exact recurrence, Zeckendorf and identity toolkit.")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
        p.set_defaults(handler=handler)
        return p

    p = add("eval", cmd_eval, help="evaluate a named sequence at a signed index")
    p.add_argument("family")
    p.add_argument("n", type=int)

    p = add("encode", cmd_encode, help="Zeckendorf or negafibonacci encoding")
    p.add_argument("kind", choices=["zeckendorf", "negafibonacci"])
    p.add_argument("n", type=int)

    p = add("decode", cmd_decode, help="decode F[k]+... text or representation JSON")
    p.add_argument("rep")
    p.add_argument("--kind", choices=["zeckendorf", "negafibonacci"])

    p = add("verify", cmd_verify, help="verify c*S(n) = sum S(n+e)")
    p.add_argument("--family", required=True)
    p.add_argument("--mult", type=int, required=True)
    p.add_argument("--offsets", type=_int_list, required=True)
    p.add_argument("--min-n", type=int)
    p.add_argument("--mode", choices=["symbolic", "numeric", "both"], default="both")
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)

    p = add("discover", cmd_discover, help="find offset sets whose ratio powers sum to c")
    p.add_argument("--family", required=True, choices=["fibonacci", "pell"])
    p.add_argument("--mult", type=int, required=True)
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--gap", type=int)
    p.add_argument("--approx", action="store_true")

    p = add("family", cmd_family, help="generate the even-r family identity")
    p.add_argument("--family", required=True)
    p.add_argument("--r", type=int, required=True)

    p = add("tile", cmd_tile, help="tiling oracle")
    p.add_argument("action", choices=["count", "list", "break", "bijection"])
    p.add_argument("n", type=int)
    p.add_argument("--family", default="pell")
    p.add_argument("--coeffs", type=_int_list)
    p.add_argument("--cell", type=int)

    p = add("ring", cmd_ring, help="quadratic ring checks")
    p.add_argument("action", choices=["pow", "lucas-sum", "binet"])
    p.add_argument("r", type=int, help="exponent (pow, lucas-sum) or index (binet)")
    p.add_argument("--ring", choices=["golden", "silver"], default="golden")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--family", choices=["fibonacci", "pell"], default="fibonacci")
    p.add_argument("--allow-odd", action="store_true")
    p.add_argument("--approx", action="store_true")

    p = add("diophantine", cmd_diophantine, help="Lucas/Pell-Lucas Diophantine characterisation")
    p.add_argument("kind", choices=["fib-lucas", "pell-pell-lucas"])
    p.add_argument("n", type=int)

    p = add("catalog", cmd_catalog, help="run every identity in the shipped catalog")
    p.add_argument("action", choices=["check"])
    p.add_argument("--file")
    return parser


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("handler", "json", "command")}


def _render_text(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']}"]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, v in enumerate(value):
                walk(f"{prefix}{i}.", v)
        else:
            lines.append(f"  {prefix[:-1]:<32} {value}")

    walk("", report["result"])
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command if args.command not in ("tile", "ring", "catalog") else f"{args.command} {args.action}"
    try:
        result, status = args.handler(args)
    except (ZeckitError, UsageError, ValueError) as exc:
        report = {"command": command, "inputs": _inputs(args), "result": {"error": str(exc)}, "status": FAILED}
        print(json.dumps(report) if args.json else f"{command}: error: {exc}", file=sys.stdout)
        return 2
    report = {"command": command, "inputs": _inputs(args), "result": result, "status": status}
    print(json.dumps(report, default=str) if args.json else _render_text(report))
    return EXIT[status]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
