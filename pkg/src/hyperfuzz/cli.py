"""Command-line front end.

Exit codes: 0 the property holds, 1 it fails (a witness is printed),
2 bad input or usage, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .core import CheckReport, HyperGroupoid
from .errors import HyperfuzzError, InputError
from .explore import (
    PROPERTIES,
    THEOREMS,
    VerificationScope,
    canonical_key,
    enumerate_hypergroupoids,
    find_counterexample,
    verify_theorem,
)
from .formats import read_fuzzy, read_hypergroupoid, render_fuzzy, render_hypergroupoid
from .fuzzy import compose, format_grade
from .ideals import IdealKind, Method, check_ideal, classify

OK, FAIL, USAGE, INTERNAL = 0, 1, 2, 3

_LHS = {
    "right": "(f o 1)",
    "left": "(1 o f)",
    "quasi": "((f o 1) ^ (1 o f))",
    "bi": "(f o 1 o f)",
}


class InvariantViolation(Exception):
    pass


def witness_json(h: HyperGroupoid, witness) -> dict | None:
    if witness is None:
        return None
    out = {}
    for key, value in witness.items():
        if isinstance(value, frozenset):
            out[key] = [h.names[e] for e in sorted(value)]
        elif isinstance(value, Fraction):
            out[key] = format_grade(value)
        else:
            out[key] = h.names[value]
    return out


def describe_witness(h: HyperGroupoid, report: CheckReport) -> str:
    w = witness_json(h, report.witness)
    if report.check == "associativity":
        return (f"({w['x']} o {w['y']})*{{{w['z']}}} = {{{', '.join(w['left'])}}} but "
                f"{{{w['x']}}}*({w['y']} o {w['z']}) = {{{', '.join(w['right'])}}}")
    if report.method == Method.CHARACTERIZATION.value:
        return f"at {w['a']}: {_LHS[report.check]}({w['a']}) = {w['lhs']} > f({w['a']}) = {w['f_a']}"
    if report.check == "right":
        return (f"{w['u']} in {w['x']} o {w['y']} but "
                f"f({w['u']}) = {w['f_u']} < f({w['x']}) = {w['f_x']}")
    if report.check == "left":
        return (f"{w['u']} in {w['x']} o {w['y']} but "
                f"f({w['u']}) = {w['f_u']} < f({w['y']}) = {w['f_y']}")
    if report.check == "quasi":
        return (f"{w['x']} in {w['b']} o {w['s']} and {w['x']} in {w['t']} o {w['c']} but "
                f"f({w['x']}) = {w['f_x']} < min(f({w['b']}), f({w['c']})) = "
                f"min({w['f_b']}, {w['f_c']})")
    return (f"{w['u']} in ({w['x']} o {w['y']})*{{{w['z']}}} but "
            f"f({w['u']}) = {w['f_u']} < min(f({w['x']}), f({w['z']})) = "
            f"min({w['f_x']}, {w['f_z']})")


def report_json(h: HyperGroupoid, report: CheckReport) -> dict:
    return {"check": report.check, "method": report.method, "passed": report.passed,
            "witness": witness_json(h, report.witness)}


def _load_hg(path) -> HyperGroupoid:
    try:
        return read_hypergroupoid(path)
    except InputError as e:
        e.path = path
        raise


def _load_fz(path, h: HyperGroupoid):
    try:
        return read_fuzzy(path, h)
    except InputError as e:
        e.path = path
        raise


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------------

def cmd_check(args) -> int:
    h = _load_hg(args.hg)
    report = h.associativity
    text = f"hypersemigroup: {'yes' if report.passed else 'no'}\n"
    if not report.passed:
        text += f"witness: {describe_witness(h, report)}\n"
    _emit(args, report_json(h, report), text)
    return OK if report.passed else FAIL


def cmd_compose(args) -> int:
    h = _load_hg(args.hg)
    f, g = _load_fz(args.f, h), _load_fz(args.g, h)
    fg = compose(h, f, g)
    if args.out:
        Path(args.out).write_text(render_fuzzy(fg), encoding="utf-8")
        text = f"wrote {args.out}\n"
    else:
        text = render_fuzzy(fg)
    _emit(args, {"grades": {s: format_grade(v) for s, v in zip(h.names, fg.grades)}}, text)
    return OK


def cmd_ideal(args) -> int:
    h = _load_hg(args.hg)
    f = _load_fz(args.fz, h)
    methods = list(Method) if args.method == "both" else [Method(args.method)]
    reports = [check_ideal(h, f, args.kind, m) for m in methods]
    lines = []
    for r in reports:
        lines.append(f"{r.check} ideal ({r.method}): {'pass' if r.passed else 'fail'}")
        if not r.passed:
            lines.append(f"  witness: {describe_witness(h, r)}")
    agree = len({r.passed for r in reports}) == 1
    payload = {"kind": args.kind, "reports": [report_json(h, r) for r in reports], "agree": agree}
    _emit(args, payload, "\n".join(lines) + "\n")
    if not agree:
        raise InvariantViolation("definition and characterization disagree")
    return OK if reports[0].passed else FAIL


def cmd_classify(args) -> int:
    h = _load_hg(args.hg)
    f = _load_fz(args.fz, h)
    p = classify(h, f)

    def yn(v):
        return "n/a (not a hypersemigroup)" if v is None else ("yes" if v else "no")

    text = "".join(f"{name:<15}{yn(getattr(p, name))}\n"
                   for name in ("right", "left", "quasi", "bi"))
    text += f"{'hypersemigroup':<15}{yn(p.associative)}\n"
    _emit(args, p.as_dict(), text)
    return OK


def _scope(args) -> VerificationScope:
    if args.samples is not None or args.seed is not None:
        if args.samples is None or args.seed is None:
            raise InputError("--samples and --seed go together")
        return VerificationScope.sampled(args.size, args.grid, args.samples, args.seed, args.assoc_only)
    return VerificationScope(args.size, args.grid, assoc_only=args.assoc_only)


def cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, _scope(args))
    payload = report.as_dict()
    if not args.no_timing:
        payload["elapsed"] = round(report.elapsed, 3)
    _emit(args, payload, report.render(timing=not args.no_timing))
    if not report.ok:
        raise InvariantViolation(f"{report.disagreements} disagreements for {report.theorem}")
    return OK


def cmd_search(args) -> int:
    found = find_counterexample(args.property, _scope(args))
    if found is None:
        _emit(args, {"property": args.property, "found": None},
              f"{args.property}: nothing found in scope\n")
        return FAIL
    h = found.hypergroupoid
    text = f"# {args.property}: found at instance {found.index}\n" + render_hypergroupoid(h)
    for f in found.fuzzy:
        text += "# fuzzy\n" + "".join(f"# {line}\n" for line in render_fuzzy(f).splitlines())
    text += f"# detail: {found.detail}\n"
    _emit(args, {"found": found.as_dict()}, text)
    return OK


def cmd_enumerate(args) -> int:
    seen = set()
    written = []
    chunks = []
    for i, h in enumerate(enumerate_hypergroupoids(args.size)):
        if args.assoc_only and not h.is_associative:
            continue
        if args.canonical:
            key = canonical_key(h)
            if key in seen:
                continue
            seen.add(key)
        name = f"hg{args.size}-{i:06d}.hg"
        body = render_hypergroupoid(h)
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / name).write_text(body, encoding="utf-8")
        else:
            chunks.append(f"# {name}\n{body}")
        written.append(name)
    if args.out:
        text = f"{len(written)} tables written to {args.out}\n"
    else:
        text = "\n".join(chunks) + f"# {len(written)} tables\n"
    _emit(args, {"size": args.size, "count": len(written), "files": written}, text)
    return OK


# -- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="hyperfuzz", description="Fuzzy ideals of finite hypergroupoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="is the table a hypersemigroup?")
    p.add_argument("hg")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compose", parents=[common], help="sup-min product of two fuzzy subsets")
    p.add_argument("hg")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("ideal", parents=[common], help="test one ideal property")
    p.add_argument("hg")
    p.add_argument("fz")
    p.add_argument("--kind", required=True, choices=[k.value for k in IdealKind])
    p.add_argument("--method", default="definition",
                   choices=[m.value for m in Method] + ["both"])
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("classify", parents=[common], help="all ideal properties at once")
    p.add_argument("hg")
    p.add_argument("fz")
    p.set_defaults(func=cmd_classify)

    scope = argparse.ArgumentParser(add_help=False)
    scope.add_argument("--size", type=int, required=True)
    scope.add_argument("--grid", type=int, default=2)
    scope.add_argument("--samples", type=int)
    scope.add_argument("--seed", type=int)
    scope.add_argument("--assoc-only", action="store_true")

    p = sub.add_parser("verify", parents=[common, scope], help="cross-check a theorem over a scope")
    p.add_argument("--theorem", required=True, type=str.upper, choices=THEOREMS)
    p.add_argument("--no-timing", action="store_true", help="omit the wall-time line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common, scope], help="find an instance with a property")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("enumerate", parents=[common], help="write every table of a given size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--assoc-only", action="store_true")
    p.add_argument("--canonical", action="store_true", help="one table per isomorphism class")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    try:
        return args.func(args)
    except InvariantViolation as e:
        print(f"internal error: {e}", file=sys.stderr)
        return INTERNAL
    except (HyperfuzzError, ValueError, OSError) as e:
        path = getattr(e, "path", None)
        print(f"error: {path}:{e}" if path else f"error: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
