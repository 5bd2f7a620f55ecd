"""Command-line entry point: params, encode, decode, simulate, verify.

Exit codes: 0 ok, 1 usage or input error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from . import cascade, oracle, sim
from ._backend import BACKEND
from .field import FieldError, field_new
from .construction import triple_new

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for verification failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_auto(text: str) -> int:
    return int(text, 0)


def _add_code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("code parameters (defaults: GF(256), n=128, 98/82/36)")
    g.add_argument("--m", type=int, default=8, help="field GF(2^m), 2..16")
    g.add_argument("--n", type=int, default=128, help="component code length")
    g.add_argument("--ka", type=int, default=98)
    g.add_argument("--kb", type=int, default=82)
    g.add_argument("--kz", type=int, default=36)
    g.add_argument("--alpha", type=_int_auto, default=None,
                   help="mixing element (default: field generator)")
    g.add_argument("--prim-poly", type=_int_auto, default=None,
                   help="primitive polynomial bit mask, e.g. 0x11d")


def _triple_from_args(args):
    try:
        field = field_new(args.m, args.prim_poly)
        return triple_new(field, args.n, args.ka, args.kb, args.kz, args.alpha)
    except (FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _hex_width(triple) -> int:
    return (triple.field.m + 3) // 4


def format_symbols(symbols, width: int) -> str:
    return " ".join(f"{s:0{width}x}" for s in symbols)


def parse_symbols(text: str, q: int, expected: int) -> list:
    out = []
    for tok in text.split():
        try:
            v = int(tok, 16)
        except ValueError:
            raise UsageError(f"malformed symbol {tok!r}: not hexadecimal") from None
        if not 0 <= v < q:
            raise UsageError(f"malformed symbol {tok!r}: outside GF({q})")
        out.append(v)
    if len(out) != expected:
        raise UsageError(f"expected {expected} symbols, got {len(out)}")
    return out


def cmd_params(args, out) -> int:
    triple = _triple_from_args(args)
    p = triple.params()
    print(f"n0={p.n0} k0={p.k0} d0={p.d0}", file=out)
    for name, code in (("a", triple.code_a), ("b", triple.code_b), ("z", triple.code_z)):
        print(f"C_{name}: n={code.n} k={code.k} d={code.d}", file=out)
    print(f"radius={p.radius} alpha={triple.alpha:#x} prim_poly={triple.field.prim_poly:#x}",
          file=out)
    return EXIT_OK


def cmd_encode(args, out) -> int:
    triple = _triple_from_args(args)
    msg = parse_symbols(sys.stdin.read(), triple.field.q, triple.k0)
    print(format_symbols(triple.encode(msg), _hex_width(triple)), file=out)
    return EXIT_OK


def cmd_decode(args, out) -> int:
    triple = _triple_from_args(args)
    r = parse_symbols(sys.stdin.read(), triple.field.q, 3 * triple.n)
    res = cascade.decode(triple, r)
    w = _hex_width(triple)
    print(f"status: {res.status.value}", file=out)
    if res.ok:
        print(f"message: {format_symbols(res.message.flat(), w)}", file=out)
        print(f"codeword: {format_symbols(res.codeword, w)}", file=out)
    print(f"trace: {res.trace.summary()}", file=out)
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    triple = _triple_from_args(args)
    try:
        model = sim.parse_model(args.model)
        if args.sweep:
            values = sim.sweep_values(model.kind, args.sweep)
            models = [sim.ChannelModel.fixed(v) if model.kind == "fixed" else sim.ChannelModel.qsc(v)
                      for v in values]
        else:
            models = [model]
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        limit = 3 * triple.n
        for mdl in models:
            if mdl.kind == "fixed" and mdl.tau > limit:
                raise ValueError(f"tau={mdl.tau} exceeds code length {limit}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = []
    for mdl in models:
        rec = sim.run_simulation(triple, mdl, args.trials, args.seed, jobs=args.jobs)
        records.append(rec)
        breakdown = ", ".join(f"{k}={v}" for k, v in sorted(rec.failures_by_status.items()))
        print(f"{mdl.describe()}: fer={rec.fer:.6g} successes={rec.successes} "
              f"miscorrections={rec.miscorrections} failures={rec.failures}"
              f"{' (' + breakdown + ')' if breakdown else ''} "
              f"mean_decode={rec.mean_decode_time * 1e3:.3f}ms", file=sys.stderr)
    text = sim.records_to_csv(triple, records)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    field = field_new(2)
    failed = False
    for n, ks in oracle.TINY_INSTANCES:
        triple = triple_new(field, n, *ks)
        got, want = oracle.check_min_distance(triple)
        ok = got == want
        failed |= not ok
        print(f"[{'PASS' if ok else 'FAIL'}] min distance GF(4) n={n} k={ks}: "
              f"enumerated={got} predicted={want}", file=out)
    triple = triple_new(field, 3, 2, 1, 1)
    bad = oracle.oracle_mismatches(triple)
    failed |= bad != 0
    print(f"[{'PASS' if bad == 0 else 'FAIL'}] oracle equivalence GF(4) n=3 k=(2, 1, 1): "
          f"{bad} mismatches", file=out)
    if not args.tiny:
        desk = triple_new(field_new(4), 15, 11, 9, 5)
        radius = desk.params().radius
        errors = 0
        for tau in range(radius + 1):
            rec = sim.run_simulation(desk, sim.ChannelModel.fixed(tau), args.trials, seed=tau)
            errors += rec.trials - rec.successes
        failed |= errors != 0
        print(f"[{'PASS' if errors == 0 else 'FAIL'}] radius check GF(16) n=15 k=(11, 9, 5): "
              f"{errors} frame errors for tau <= {radius}", file=out)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plotkin-rs",
                     description="Tripled-length RS codes (a|a+b|a+alpha*b+z) and their decoder")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({BACKEND} kernel)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="print n0, k0, d0 and component distances")
    _add_code_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="hex message symbols on stdin -> codeword on stdout")
    _add_code_args(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="hex received word on stdin -> status, message, trace")
    _add_code_args(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo frame error rate, written as CSV")
    _add_code_args(p)
    p.add_argument("--model", required=True, help="fixed:TAU or qsc:P")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    p.add_argument("--sweep", default=None, help="LO:HI:STEP (inclusive) over TAU or P")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="brute-force checks against exhaustive enumeration")
    p.add_argument("--tiny", action="store_true", help="GF(4) suites only")
    p.add_argument("--trials", type=int, default=1000,
                   help="random patterns per weight for the GF(16) radius check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"plotkin-rs {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
