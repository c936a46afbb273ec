"""Command-line driver.

Exit codes: 0 success, 1 a check failed (mismatch), 2 usage or parse
error, 3 the rewrite budget ran out.
"""

import argparse
import json
import sys

from .algebra import Gen, omega
from .expansion import expand_all_pivots, expand_ns
from .exprio import ParseError, parse_element, print_element
from .grading import Signature, SignatureError
from .normal import DEFAULT_MAX_STEPS, BudgetExceeded, NormalOrderConfig, normal_order
from .rules import HalfIntegerPowerError, dump_rules
from .verify import sweep, verify_lemma

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _sig(args) -> Signature:
    try:
        return Signature(args.m, args.n)
    except SignatureError as exc:
        raise UsageError(str(exc)) from None


def _parse(args):
    sig = _sig(args)
    try:
        return parse_element(args.expr, sig)
    except ParseError as exc:
        caret = ""
        if exc.pos is not None:
            caret = f"\n  {args.expr}\n  {' ' * exc.pos}^"
        raise UsageError(f"parse error: {exc}{caret}") from None


def _write_json(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_normalize(args):
    x = _parse(args)
    print(print_element(normal_order(x, NormalOrderConfig(max_rewrite_steps=args.budget))))
    return EXIT_OK


def cmd_expand(args):
    x = _parse(args)
    if args.pivot != "all":
        y = expand_ns(x, args.pivot)
        print(print_element(normal_order(y) if args.normalize else y))
        return EXIT_OK
    # every top-level pivot of a single generator, plus an agreement check
    words = list(x.terms)
    if len(words) != 1 or len(words[0]) != 1 or len(words[0][0]) != 2:
        raise UsageError("--pivot all takes a single generator E[a,b]")
    g = Gen(*words[0][0])
    scale = x.terms[words[0]]
    expansions = expand_all_pivots(x.sig, g)
    if not expansions:
        print(print_element(x))
        return EXIT_OK
    forms = set()
    for c, ex in expansions.items():
        ex = ex.scale(scale)
        nf = normal_order(ex)
        forms.add(nf)
        print(f"c={c}: {print_element(nf if args.normalize else ex)}")
    if len(forms) != 1:
        print("pivot expansions disagree after normal ordering", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_omega(args):
    x = _parse(args)
    y = omega(x)
    print(print_element(y if args.raw else normal_order(y)))
    return EXIT_OK


def _report_exit(report):
    if report["summary"]["fail"] == 0:
        return EXIT_OK
    if all(c["status"] == "budget" for c in report["cases"] if c["status"] != "pass"):
        return EXIT_BUDGET
    return EXIT_FAIL


def _emit_report(report, args):
    if args.only_failures:
        report = dict(report, cases=[c for c in report["cases"] if c["status"] != "pass"])
    if args.json:
        _write_json(report, args.json)


def cmd_sweep(args):
    if args.max_total < 2:
        raise UsageError("--max-total must be at least 2")
    if args.max_height is not None and args.max_height < 1:
        raise UsageError("--max-height must be at least 1")
    out = sys.stderr if args.json == "-" else sys.stdout

    def progress(item):
        label, results, ms = item
        nfail = sum(1 for r in results if r.status != "pass")
        print(f"{label:>10}  pairs={len(results):6d}  fail={nfail}  {ms / 1000:.2f}s", file=out, flush=True)

    report = sweep(
        args.max_total,
        max_height=args.max_height,
        strategy=args.pivot,
        jobs=args.jobs,
        max_steps=args.budget,
        progress=None if args.quiet else progress,
    )
    for c in report["cases"]:
        if c["status"] != "pass":
            x, y = c["pair"]
            print(f"FAIL {c['signature']} {x}*{y} [{c.get('detail', c['status'])}]", file=out)
            print(f"  direct:   {c['lhs']}", file=out)
            print(f"  expanded: {c['rhs']}", file=out)
    s = report["summary"]
    print(f"sweep: {s['pass']} pass, {s['fail']} fail, {report['timing_ms']['total'] / 1000:.2f}s", file=out)
    _emit_report(report, args)
    return _report_exit(report)


def cmd_verify_lemma(args):
    if args.max_total < 2:
        raise UsageError("--max-total must be at least 2")
    out = sys.stderr if args.json == "-" else sys.stdout
    report = verify_lemma(args.max_total)
    for name, t in report["tallies"].items():
        print(f"{name:>16}  pass={t['pass']:5d}  fail={t['fail']}", file=out)
    for c in report["cases"]:
        if c["status"] != "pass":
            print(f"FAIL {c['signature']} {c['case']} {c['tuple']} [{c['status']}]", file=out)
            print(f"  lhs: {c['lhs']}", file=out)
            print(f"  rhs: {c['rhs']}", file=out)
    s = report["summary"]
    print(f"verify-lemma: {s['pass']} pass, {s['fail']} fail", file=out)
    _emit_report(report, args)
    return _report_exit(report)


def cmd_dump_rules(args):
    _write_json(dump_rules(), args.json or "-")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uqpbw", description="PBW normal ordering for U_q[gl(m|n)].")
    sub = p.add_subparsers(dest="command", required=True)

    def sig_args(sp):
        sp.add_argument("--m", type=int, required=True, help="number of even indices (m >= 1)")
        sp.add_argument("--n", type=int, required=True, help="number of odd indices (n >= 1)")
        sp.add_argument("expr", help="expression, e.g. 'E[1,3]*K[2]^-1 + q*E[2,1]'")

    sp = sub.add_parser("normalize", help="print the PBW normal form of an expression")
    sig_args(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_MAX_STEPS, help="rewrite-step budget")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("expand", help="rewrite nonsimple generators in simple ones")
    sig_args(sp)
    sp.add_argument("--pivot", choices=["row", "col", "all"], default="row")
    sp.add_argument("--normalize", action="store_true", help="normal-order the expansion")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("omega", help="apply the antiautomorphism omega")
    sig_args(sp)
    sp.add_argument("--raw", action="store_true", help="print without normal ordering")
    sp.set_defaults(func=cmd_omega)

    def report_args(sp):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
        sp.add_argument("--only-failures", action="store_true", help="keep only failing cases in the JSON")

    sp = sub.add_parser("sweep", help="differential sweep over signatures and generator pairs")
    sp.add_argument("--max-total", type=int, default=5, help="largest m+n (default 5)")
    sp.add_argument("--max-height", type=int, default=None, help="largest generator height (default: all)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--pivot", choices=["row", "col"], default="row")
    sp.add_argument("--budget", type=int, default=DEFAULT_MAX_STEPS, help="rewrite-step budget per pair")
    sp.add_argument("--quiet", action="store_true", help="no per-signature progress lines")
    report_args(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify-lemma", help="check every catalog identity by expansion")
    sp.add_argument("--max-total", type=int, default=5)
    report_args(sp)
    sp.set_defaults(func=cmd_verify_lemma)

    sp = sub.add_parser("dump-rules", help="print the rule table as JSON")
    sp.add_argument("--json", metavar="PATH")
    sp.set_defaults(func=cmd_dump_rules)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HalfIntegerPowerError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
