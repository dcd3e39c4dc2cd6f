"""Command line interface.

::

    shannon-curvature eval "K(4)*Star(4)" --fvector
    shannon-curvature verify theorem1 --random 100 --seed 1 --workers 4
    shannon-curvature expectation "C(5)" --samples 20000 --seed 3

Exit status: 0 all checked identities hold, 1 an identity failed, 2 usage
or input error, 3 a resource budget was exceeded.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .curvature import curvatures
from .dsl import DslError, evaluate, parse, to_source
from .errors import BudgetExceeded, ShannonError
from .homology import betti
from .io import vertex_name
from .morse import index_expectations, ph_indices, random_coloring
from .simplicial import euler_characteristic, f_vector
from .verify import SUITES, run_suite
from .wu import wu_characteristic

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def render(value):
    """Text form of a value: rationals as ``p/q``, tuples as ``(a, b)``."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(render(v) for v in value) + ")"
    return str(value)


def jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    return value


def _combine(vectors):
    """Coefficient-weighted sum of integer vectors, keeping full length."""
    n = max((len(v) for _, v in vectors), default=0)
    return tuple(sum(c * (v[i] if i < len(v) else 0) for c, v in vectors) for i in range(n))


# -- eval ----------------------------------------------------------------------

def cmd_eval(args):
    tree = parse(args.expr)
    elem = evaluate(tree)
    wanted = [k for k in ("fvector", "chi", "curvature", "betti", "wu", "indices") if getattr(args, k)]
    if not wanted:
        wanted = ["fvector", "chi"]
    if args.max_dim is not None and set(wanted) - {"fvector"}:
        raise UsageError("--max-dim is an approximation mode and only works with --fvector")
    out = {
        "expression": to_source(tree),
        "terms": [{"coefficient": c, "vertices": len(g), "edges": g.num_edges} for c, g in elem.terms],
    }
    if "fvector" in wanted:
        fv = _combine([(c, f_vector(g, max_dim=args.max_dim)) for c, g in elem.terms])
        out["fvector"] = list(fv)
        if args.max_dim is not None:
            out["fvector_truncated_at_dim"] = args.max_dim
    if "chi" in wanted:
        out["chi"] = sum(c * euler_characteristic(g) for c, g in elem.terms)
    if "betti" in wanted:
        out["betti"] = list(_combine([(c, betti(g)) for c, g in elem.terms]))
    if "wu" in wanted:
        out["wu"] = sum(c * wu_characteristic(g) for c, g in elem.terms)
    if "curvature" in wanted:
        out["curvature"] = [
            {"term": i, "vertex": vertex_name(v), "value": str(c * k)}
            for i, (c, g) in enumerate(elem.terms) for v, k in curvatures(g).items()
        ]
    if "indices" in wanted:
        rows = []
        for i, (c, g) in enumerate(elem.terms):
            f = random_coloring(g, args.seed, 0, i)
            for v, ind in ph_indices(g, f).items():
                rows.append({"term": i, "vertex": vertex_name(v), "value": c * ind})
        out["indices"] = rows
    emit_eval(out, args.format)
    return EXIT_OK


def emit_eval(out, fmt):
    if fmt == "json":
        print(json.dumps(out, indent=2))
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "term", "index", "value"])
        for key in ("fvector", "betti"):
            for k, v in enumerate(out.get(key, [])):
                w.writerow([key, "", k, v])
        for key in ("chi", "wu"):
            if key in out:
                w.writerow([key, "", "", out[key]])
        for key in ("curvature", "indices"):
            for row in out.get(key, []):
                w.writerow([key, row["term"], row["vertex"], row["value"]])
        sys.stdout.write(buf.getvalue())
        return
    print("expression: %s" % out["expression"])
    print("terms: " + (" + ".join("%d*[%d/%d]" % (t["coefficient"], t["vertices"], t["edges"])
                                  for t in out["terms"]) or "0"))
    if "fvector" in out:
        label = "fvector"
        if "fvector_truncated_at_dim" in out:
            label += " (TRUNCATED at dim %d)" % out["fvector_truncated_at_dim"]
        print("%s: %s" % (label, render(out["fvector"])))
    for key in ("chi", "betti", "wu"):
        if key in out:
            print("%s: %s" % (key, render(out[key])))
    multi = len(out["terms"]) > 1
    for key in ("curvature", "indices"):
        if key in out:
            print("%s:" % key)
            for row in out[key]:
                prefix = "[%d] " % row["term"] if multi else ""
                print("  %s%s %s" % (prefix, row["vertex"], row["value"]))


# -- verify ----------------------------------------------------------------------

def cmd_verify(args):
    res = run_suite(args.suite, count=args.random, seed=args.seed, max_vertices=args.max_vertices,
                    max_edges=args.max_edges, workers=args.workers)
    ok = res.ok
    summary = {"suite": res.name, "seed": res.seed, "cases": len(res.cases),
               "failed": res.failures}
    if res.name == "wu-product":
        witnesses = [c["case"] for c in res.cases if c["differences"]]
        summary["witness_cases"] = len(witnesses)
        # the pointwise product rule is expected to fail somewhere
        ok = ok and bool(witnesses)
    summary["ok"] = ok
    if args.format == "json":
        print(json.dumps({**summary, "results": jsonable(res.cases)}, indent=2))
    elif args.format == "csv":
        keys = list(res.cases[0]) if res.cases else ["case", "ok"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for c in res.cases:
            w.writerow([json.dumps(jsonable(c[k])) if isinstance(c[k], (list, dict)) else c[k]
                        for k in keys])
        sys.stdout.write(buf.getvalue())
    else:
        for c in res.cases:
            extra = " ".join("%s=%s" % (k, render(v)) for k, v in c.items()
                             if k not in ("case", "ok"))
            print("case %d %s %s" % (c["case"], extra, "ok" if c["ok"] else "FAIL"))
        passed = len(res.cases) - len(res.failures)
        line = "%s: %d/%d cases ok" % (res.name, passed, len(res.cases))
        if "witness_cases" in summary:
            line += ", %d cases with pointwise Wu-curvature product failure" % summary["witness_cases"]
        print(line)
        print("result: %s" % ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_VIOLATION


# -- expectation -------------------------------------------------------------------

def cmd_expectation(args):
    elem = evaluate(parse(args.expr))
    rows, ok = [], True
    for i, (c, g) in enumerate(elem.terms):
        exact = curvatures(g)
        est = index_expectations(g, args.samples, args.seed, args.workers)
        for v in g.vertices:
            e = est[v]
            within = abs(float(e.estimate - exact[v])) <= 4 * e.stderr if args.samples > 1 else None
            ok = ok and within is not False
            rows.append({"term": i, "vertex": vertex_name(v), "estimate": str(c * e.estimate),
                         "stderr": "%.6f" % e.stderr, "curvature": str(c * exact[v]),
                         "within_4_stderr": within})
    if args.format == "json":
        print(json.dumps({"samples": args.samples, "seed": args.seed, "ok": ok, "vertices": rows},
                         indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["term"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        multi = len(elem.terms) > 1
        for r in rows:
            prefix = "[%d] " % r["term"] if multi else ""
            print("%s%s estimate=%s stderr(diagnostic)=%s curvature=%s%s" % (
                prefix, r["vertex"], r["estimate"], r["stderr"], r["curvature"],
                "" if r["within_4_stderr"] is None else
                " ok" if r["within_4_stderr"] else " OUTSIDE 4 stderr"))
    return EXIT_OK if ok else EXIT_VIOLATION


# -- entry point -------------------------------------------------------------------

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--workers", type=int, default=1, help="worker processes")

    parser = _Parser(prog="shannon-curvature",
                     description="Curvature and topology of graphs and their strong products")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", parents=[common], help="invariants of an expression")
    ev.add_argument("expr")
    for flag in ("fvector", "chi", "curvature", "betti", "wu", "indices"):
        ev.add_argument("--" + flag, action="store_true")
    ev.add_argument("--seed", type=int, default=0, help="coloring seed for --indices")
    ev.add_argument("--max-dim", type=int, default=None,
                    help="truncate the f-vector (approximation; disables other outputs)")
    ev.set_defaults(func=cmd_eval)

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("suite", choices=sorted(SUITES))
    ve.add_argument("--random", type=int, default=None, metavar="N", help="number of cases")
    ve.add_argument("--max-vertices", type=int, default=None)
    ve.add_argument("--max-edges", type=int, default=None)
    ve.add_argument("--seed", type=int, default=0)
    ve.set_defaults(func=cmd_verify)

    ex = sub.add_parser("expectation", parents=[common],
                        help="Monte-Carlo index expectation versus curvature")
    ex.add_argument("expr")
    ex.add_argument("--samples", type=int, required=True)
    ex.add_argument("--seed", type=int, default=0)
    ex.set_defaults(func=cmd_expectation)
    return parser


def _protect_expression(argv):
    # argparse reads "-C(5)+..." as an option; move such an expression behind "--"
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in ("eval", "expectation") or "--" in argv:
        return argv
    for i, tok in enumerate(argv[1:], 1):
        if tok.startswith("-") and not tok.startswith("--") and tok != "-h":
            return argv[:i] + argv[i + 1:] + ["--", tok]
    return argv


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_expression(argv))
        if getattr(args, "samples", 1) < 1 or args.workers < 1:
            raise UsageError("--samples and --workers must be positive")
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (DslError, ShannonError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
