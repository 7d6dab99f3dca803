"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 unsupported input or
bound exceeded, 4 a checked assertion failed (gallery mismatch, suite
failure, oracle discrepancy).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fgmod, gallery, harness, symmod
from .analysis import PROPERTIES, analyze, describe
from .errors import BoundExceeded, ParseError, PreconditionError, UnsupportedError
from .fgmod import FinPresModule
from .rings import ideal, radical_ideal
from .serialize import (
    certificate_to_json,
    ideal_to_json,
    module_from_json,
    module_to_json,
    num,
    parse_int,
    prime_set_to_json,
    submodule_from_json,
    submodule_to_json,
)
from .spectop import psi_dot, psi_image, psi_surjective, v_ideal, v_submodule

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_ASSERT = 0, 2, 3, 4


# -- input ------------------------------------------------------------------


def load_json(arg: str, what: str = "module"):
    """Inline JSON, ``-`` for stdin, or a path."""
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith(("{", "[")):
        text = arg
    else:
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise ParseError(f"{what}: cannot read {arg!r}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_module(arg: str):
    return module_from_json(load_json(arg))


def require_fgmod(m, what: str) -> FinPresModule:
    if not isinstance(m, FinPresModule):
        raise UnsupportedError(f"{what} needs a finitely presented module")
    return m


def emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------


def cmd_analyze(args) -> int:
    m = load_module(args.module)
    props = None if args.properties is None else [p.strip() for p in args.properties.split(",") if p.strip()]
    if props is not None:
        bad = [p for p in props if p not in PROPERTIES]
        if bad:
            raise ParseError(f"--properties: unknown {', '.join(bad)} (choose from {', '.join(PROPERTIES)})")
    rows = analyze(m, props)
    payload = {
        "module": module_to_json(m),
        "properties": [
            {
                "property": r.property,
                "verdict": r.verdict,
                "certificate": None if r.certificate is None else certificate_to_json(r.certificate, m.ring),
                "note": r.note,
            }
            for r in rows
        ],
    }
    lines = [describe(m)]
    width = max(len(r.property) for r in rows)
    for r in rows:
        lines.append(f"  {r.property:<{width}}  {r.mark}" + (f"  ({r.note})" if r.note else ""))
        if r.certificate is not None:
            for c in r.certificate.per_prime:
                lines.append(f"  {'':<{width}}    {'ok  ' if c.holds else 'FAIL'} {c.label()}: {c.witness}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_radical(args) -> int:
    m = require_fgmod(load_module(args.module), "radical")
    if (args.submodule is None) == (args.ideal is None):
        raise ParseError("radical: give exactly one of --submodule or --ideal")
    formula = None
    if args.ideal is not None:
        i = ideal(m.ring, parse_int(args.ideal, "--ideal"))
        n = m.ideal_times(i)
        if fgmod.ann(m) <= i:
            formula = fgmod.check_radical_formula(m, i)
        source = f"{i}M"
    else:
        n = submodule_from_json(load_json(args.submodule, "submodule"), m)
        source = "N"
    rad = fgmod.prime_radical(n)
    c = fgmod.colon(n)
    rc = fgmod.colon(rad)
    sq = radical_ideal(m.ring, c)
    payload = {
        "module": module_to_json(m),
        "submodule": submodule_to_json(n),
        "radical": submodule_to_json(rad),
        "radical_colon": ideal_to_json(rc),
        "sqrt_colon": ideal_to_json(sq),
        "radical_formula": formula,
    }
    lines = [
        f"{source:<14} = {n}",
        f"rad({source})".ljust(14) + f" = {rad}",
        f"(rad : M)      = {rc}",
        f"sqrt((N : M))  = {sq}",
    ]
    if formula is not None:
        right = radical_ideal(m.ring, i)
        lines.append(f"radical formula {'holds' if formula else 'fails'}: rad({i}M) vs {right}M = {m.ideal_times(right)}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_colon(args) -> int:
    m = require_fgmod(load_module(args.module), "colon")
    n = submodule_from_json(load_json(args.submodule, "submodule"), m) if args.submodule else m.zero()
    c = fgmod.colon(n)
    prime, pc = fgmod.is_prime_submodule(n)
    payload = {
        "module": module_to_json(m),
        "submodule": submodule_to_json(n),
        "colon": ideal_to_json(c),
        "prime": prime,
        "prime_colon": None if pc is None else ideal_to_json(pc),
    }
    text = f"(N : M) = {c}\nprime submodule: {'yes, over ' + str(pc) if prime else 'no'}"
    emit(args, payload, text)
    return EXIT_OK


def cmd_spec(args) -> int:
    m = load_module(args.module)
    img = psi_image(m)
    a = fgmod.ann(m) if isinstance(m, FinPresModule) else symmod.ann(m)
    payload = {
        "module": module_to_json(m),
        "ann": ideal_to_json(a),
        "psi_image": prime_set_to_json(img),
        "psi_surjective": psi_surjective(m),
        "v_ann": v_ideal(m.ring, a).render(),
    }
    lines = [describe(m), f"  Ann(M)          {a}", f"  V(Ann(M))       {v_ideal(m.ring, a).render()}", f"  psi image       {img}", f"  psi surjective  {'yes' if payload['psi_surjective'] else 'no'}"]
    if args.submodule:
        n = submodule_from_json(load_json(args.submodule, "submodule"), require_fgmod(m, "spec --submodule"))
        v = v_submodule(n)
        payload["v_submodule"] = {"radical": ideal_to_json(v.radical), "primes": prime_set_to_json(v.prime_ideals())}
        lines.append(f"  V(N)            colons over {v.radical}: {v.prime_ideals()}")
    if args.dot:
        dot = psi_dot(require_fgmod(m, "spec --dot"), args.bound)
        payload["dot"] = dot
        lines.append(dot)
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gallery(args) -> int:
    got = gallery.compute()
    diffs = gallery.compare(got, gallery.expected())
    payload = {"rows": got, "mismatches": diffs}
    text = gallery.render(got)
    if diffs:
        text += "\nMISMATCH\n" + "\n".join(diffs)
    emit(args, payload, text)
    return EXIT_ASSERT if diffs else EXIT_OK


def cmd_verify(args) -> int:
    names = list(harness.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in harness.SUITES for n in names):
        raise ParseError(f"verify: unknown suite {args.suite!r} (choose from all, {', '.join(harness.SUITES)})")
    reports = [harness.run_suite(n, args.seed, args.trials) for n in names]
    payload = reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{r.suite:<16} {'PASS' if r.passed else 'FAIL'}  trials={r.trials} failures={len(r.failures)} seed={r.seed} ({r.elapsed:.2f}s)")
        for f in r.failures[:5]:
            lines.append(f"    {f.get('shrunk_reason') or f['reason']}")
            if "shrunk" in f:
                lines.append(f"    shrunk: {json.dumps(f['shrunk'])}")
        for note in r.notes:
            lines.append(f"    note: {note}")
    if args.suite == "all":
        covered, missing = harness.coverage(reports)
        lines.append(f"coverage: {len(covered)} results" + (f", missing {sorted(missing)}" if missing else ""))
    emit(args, payload, "\n".join(lines))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_ASSERT


def cmd_oracle(args) -> int:
    from .oracle import finite_oracle

    m = require_fgmod(load_module(args.module), "oracle")
    if not m.is_finite:
        raise UnsupportedError("oracle: the module must be finite")
    o = finite_oracle(m, args.bound)
    reason = harness.check_oracle(m)
    primes = o.primes()
    payload = {
        "module": module_to_json(m),
        "submodules": num(o.count),
        "prime_submodules": [{"submodule": submodule_to_json(p), "colon": ideal_to_json(c)} for p, c in primes],
        "agrees": reason is None,
        "discrepancy": reason,
    }
    lines = [describe(m), f"  submodules        {o.count}", f"  prime submodules  {len(primes)}"]
    lines += [f"    {p}  colon {c}" for p, c in primes]
    lines.append("  closed forms agree with enumeration" if reason is None else f"  DISCREPANCY: {reason}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK if reason is None else EXIT_ASSERT


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=_u64, default=0, help="random seed (default 0)")
    common.add_argument("--trials", type=_positive, default=None, help="number of generated instances")
    common.add_argument("--bound", type=_positive, default=fgmod.DEFAULT_BOUND, help="submodule enumeration bound")

    p = _Parser(prog="pradical", description="Prime submodules, prime radicals and radical-type module properties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="decide module properties with per-prime evidence")
    a.add_argument("module", help="module JSON: inline, a path, or - for stdin")
    a.add_argument("--properties", help="comma list from: " + ", ".join(PROPERTIES))
    a.set_defaults(fn=cmd_analyze)

    r = sub.add_parser("radical", parents=[common], help="prime radical of a submodule or of IM")
    r.add_argument("module")
    r.add_argument("--submodule", help='submodule JSON, e.g. {"gens":[["2","0"]]}')
    r.add_argument("--ideal", help="generator of the ideal I")
    r.set_defaults(fn=cmd_radical)

    c = sub.add_parser("colon", parents=[common], help="colon ideal (N:M) and primality of N")
    c.add_argument("module")
    c.add_argument("--submodule", help="submodule JSON (default: the zero submodule)")
    c.set_defaults(fn=cmd_colon)

    s = sub.add_parser("spec", parents=[common], help="annihilator, psi image and closed sets")
    s.add_argument("module")
    s.add_argument("--submodule", help="also report V(N) for this submodule")
    s.add_argument("--dot", action="store_true", help="emit the psi map as a graphviz digraph")
    s.set_defaults(fn=cmd_spec)

    g = sub.add_parser("gallery", parents=[common], help="named instances against their frozen verdict table")
    g.set_defaults(fn=cmd_gallery)

    v = sub.add_parser("verify", parents=[common], help="run a seeded verification suite")
    v.add_argument("suite", help="suite id or 'all': " + ", ".join(harness.SUITES))
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="enumerate submodules of a finite module")
    o.add_argument("module")
    o.set_defaults(fn=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedError, PreconditionError, BoundExceeded) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
