"""Command line entry point: ``theta-forge {theta, chevalley, expand, verify}``.

Exit status is 0 on success, 1 when a verification fails and 2 for bad
input (unparseable expressions, partitions that are not k-strict, unknown
suites).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .chevalley import chevalley_covers, chevalley_gamma, chevalley_t_coeff, verify_chevalley
from .partitions import KStrictPartition, NotKStrictError, k_strict_upto
from .quotient import finite_truncate, theta_expansion
from .ring import ParseError, format_poly, parse_poly
from .suites import SUITES, default_config, run_suite
from .theta import pair_set_C, theta_double, theta_single
from .weyl import omega_poly, partition_to_w

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# the suites a bare ``verify`` runs, in order
DEFAULT_SUITES = ("lemmas-1", "chevalley", "agreement", "divdiff", "pfaffian", "omega", "presentation", "basis")


class UsageError(Exception):
    pass


def _parse_lambda(text, k):
    text = (text or "").strip()
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"cannot read partition {text!r}") from None
    try:
        return KStrictPartition(parts, k)
    except NotKStrictError as exc:
        raise UsageError(str(exc)) from None


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- results cache -------------------------------------------------------------


class _Cache:
    """Content-addressed store of command output; only ever saves recomputation."""

    def __init__(self, root):
        self.root = Path(root) if root else None

    def _path(self, command, args):
        blob = _dump({"command": command, "args": args, "version": __version__})
        return self.root / (hashlib.sha256(blob.encode()).hexdigest() + ".txt")

    def get(self, command, args):
        if self.root is None:
            return None
        path = self._path(command, args)
        return path.read_text() if path.is_file() else None

    def put(self, command, args, text):
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(command, args)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text)
        tmp.replace(path)


# -- commands ------------------------------------------------------------------


def cmd_theta(args, cache, out):
    lam = _parse_lambda(args.lam, args.k)
    key = {"k": args.k, "lambda": list(lam.parts), "single": args.single, "format": args.format}
    text = cache.get("theta", key)
    if text is None:
        f = theta_single(lam) if args.single else theta_double(lam)
        text = format_poly(f, args.format) + "\n"
        cache.put("theta", key, text)
    out.write(text)
    return EXIT_OK


def _chevalley_report(lam, verify):
    w = partition_to_w(lam)
    report = {
        "lambda": list(lam.parts),
        "k": lam.k,
        "w": list(w.window),
        "C": [list(p) for p in sorted(pair_set_C(lam))],
        "gamma": list(chevalley_gamma(lam)),
        "coefficient": format_poly(chevalley_t_coeff(lam)),
        "covers": [term.to_json() for term in chevalley_covers(lam)],
    }
    if verify:
        report["pass"] = verify_chevalley(lam)["pass"]
    return report


def _chevalley_text(report):
    lines = [
        f"lambda: ({','.join(map(str, report['lambda']))})  k={report['k']}",
        f"w: {','.join(map(str, report['w']))}",
        f"C: {' '.join(f'({i},{j})' for i, j in report['C']) or '-'}",
        f"gamma: ({','.join(map(str, report['gamma']))})",
        f"coefficient: {report['coefficient']}",
        "covers:",
    ]
    for term in report["covers"]:
        mu = ",".join(map(str, term["mu"]))
        lines.append(f"  {term['e']} x ({mu})  [{term['kind']}]")
    if "pass" in report:
        lines.append(f"verify: {'pass' if report['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_chevalley(args, cache, out):
    if args.all:
        ks = [args.k] if args.k is not None else [0, 1, 2]
        rows = []
        for k in ks:
            failed = [lam.parts for lam in k_strict_upto(args.max_weight, k) if not verify_chevalley(lam)["pass"]]
            total = len(k_strict_upto(args.max_weight, k))
            rows.append({"k": k, "cases": total, "failed": [list(p) for p in failed]})
        ok = all(not r["failed"] for r in rows)
        if args.format == "json":
            out.write(_dump({"max_weight": args.max_weight, "pass": ok, "rows": rows}) + "\n")
        else:
            out.write(f"{'k':>3} {'cases':>6} {'failed':>6}  result\n")
            for r in rows:
                status = "pass" if not r["failed"] else "FAIL " + " ".join(map(str, r["failed"][:5]))
                out.write(f"{r['k']:>3} {r['cases']:>6} {len(r['failed']):>6}  {status}\n")
            out.write(f"overall: {'pass' if ok else 'FAIL'}\n")
        return EXIT_OK if ok else EXIT_FAIL
    if args.k is None or args.lam is None:
        raise UsageError("chevalley needs --k and --lambda (or --all)")
    lam = _parse_lambda(args.lam, args.k)
    report = _chevalley_report(lam, args.verify)
    out.write(_dump(report) + "\n" if args.format == "json" else _chevalley_text(report))
    return EXIT_FAIL if report.get("pass") is False else EXIT_OK


def _read_expr(source):
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def cmd_expand(args, cache, out):
    text = _read_expr(args.expr)
    key = {"k": args.k, "n": args.n, "expr": text}
    cached = cache.get("expand", key)
    if cached is not None:
        out.write(cached)
        return EXIT_OK
    k = args.k
    atoms = {
        "Theta": lambda parts: theta_double(KStrictPartition(parts, k)),
        "Omega": lambda parts: omega_poly(KStrictPartition(parts, k)),
    }
    try:
        f = parse_poly(text, atoms=atoms)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}") from None
    e = theta_expansion(f, k)
    obj = e.to_json()
    if args.n is not None:
        obj = finite_truncate(e, args.n).to_json()
        obj["n"] = args.n
    result = _dump(obj) + "\n"
    cache.put("expand", key, result)
    out.write(result)
    return EXIT_OK


def cmd_verify(args, cache, out):
    names = args.suite or list(DEFAULT_SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    cfg = default_config(k_max=args.k_max, weight_max=args.weight_max, seed=args.seed)
    report = {"config": cfg, "suites": []}
    for name in names:
        checks = run_suite(name, cfg)
        entries = []
        for chk in checks:
            entry = chk.to_json()
            if not args.timings:
                # timings would make the report differ from run to run
                entry.pop("seconds")
            entries.append(entry)
        report["suites"].append({"name": name, "pass": all(c.passed for c in checks), "checks": entries})
        if args.format == "text":
            for entry in entries:
                status = "PASS" if entry["pass"] else "FAIL"
                line = f"{status} {name}: {entry['name']} ({entry['cases']} cases)"
                if "seconds" in entry:
                    line += f" {entry['seconds']:.2f}s"
                out.write(line + "\n")
                for fail in entry["failures"]:
                    out.write(f"    {fail}\n")
            out.flush()
    ok = all(s["pass"] for s in report["suites"])
    report["pass"] = ok
    if args.format == "json":
        out.write(_dump(report) + "\n")
    else:
        out.write(f"overall: {'pass' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="theta-forge", description="Double theta polynomials and their identities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--cache",
        default=os.environ.get("THETA_FORGE_CACHE"),
        help="directory for cached results (default: $THETA_FORGE_CACHE)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="print Theta_lambda(c|t)")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma separated parts, e.g. 3,1 (empty for the empty partition)")
    p.add_argument("--single", action="store_true", help="the single polynomial Theta_lambda(c), i.e. t = 0")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("chevalley", help="Chevalley rule for Theta_1 * Theta_lambda")
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--verify", action="store_true", help="also compute the product in the quotient ring")
    p.add_argument("--all", action="store_true", help="verify every k-strict lambda up to --max-weight")
    p.add_argument("--max-weight", type=_nonneg, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_chevalley)

    p = sub.add_parser("expand", help="expand an expression in the theta basis")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n", type=_nonneg, help="truncate to P(k, n)")
    p.add_argument("--expr", required=True, help="file holding the expression, or - for stdin")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--k-max", type=_nonneg, default=2)
    p.add_argument("--weight-max", type=_positive, default=8)
    p.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)}; repeatable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, _Cache(args.cache), out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
