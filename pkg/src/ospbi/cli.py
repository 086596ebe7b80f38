"""Command-line front end.

Exit status is 0 when every executed check passes, 1 when a check fails and
2 on invalid input; errors are also written to stderr as a JSON object.
"""

import argparse
import json
import os
import sys

from . import bannai_ito, numeric, pbw, rmatrix, tensor
from .casimir import (
    SubsetIndex,
    explicit_casimir,
    generate_paths,
    intermediate_casimir,
    path_consistency,
)
from .expression import parse_expression

__all__ = ["main", "parse_expression", "run"]


class UsageError(ValueError):
    pass


def _subset(text, n):
    text = text.strip().strip("{}")
    try:
        elems = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as err:
        raise UsageError(f"bad subset {text!r}") from err
    return SubsetIndex(n, elems)


def _emit(doc, text, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _emit_report(report, fmt, out):
    _emit(report.to_dict(), report.format(), fmt, out)
    return 0 if report.ok else 1


def cmd_relations(args, out):
    return _emit_report(pbw.check_defining_relations(), args.format, out)


def cmd_r_properties(args, out):
    return _emit_report(rmatrix.verify_r_properties(args.n), args.format, out)


def cmd_casimir(args, out):
    A = _subset(args.subset, args.n)
    c = intermediate_casimir(A)
    doc = {"n": args.n, "subset": list(A.elements), "terms": len(c), "casimir": str(c)}
    lines = [f"C_{A} (n={args.n}, {len(c)} terms):", str(c)]
    ok = True
    if args.explicit:
        e = explicit_casimir(A)
        ok = e == c
        doc["explicit"] = str(e)
        doc["equal"] = ok
        lines += ["explicit embedding:", str(e), f"equal: {ok}"]
    _emit(doc, "\n".join(lines), args.format, out)
    return 0 if ok else 1


def cmd_verify_bi(args, out):
    doc = bannai_ito.structure_report(
        args.n, jobs=args.jobs, diagnostics=args.diagnostics, timings=args.timings
    )
    lines = [f"# Bannai-Ito relations (n={args.n})"]
    lines.append(f"casimirs: {len(doc['casimirs'])}")
    for entry in doc["casimirs"]:
        label = "{" + ",".join(map(str, entry["subset"])) + "}"
        lines.append(f"  C_{label}: {entry['terms']} terms")
    lines.append(f"relations: {len(doc['relations'])}")
    for rel in doc["relations"]:
        a = "{" + ",".join(map(str, rel["A"])) + "}"
        b = "{" + ",".join(map(str, rel["B"])) + "}"
        lines.append(f"  {rel['status'].upper()}  A={a} B={b} residual_terms={rel['residual_terms']}")
    for diag in doc.get("diagnostics", []):
        lines.append(f"diagnostic {diag['element']}: centralizing={diag['centralizing']}")
    if "timings" in doc["meta"]:
        lines.append(f"timings: {doc['meta']['timings']}")
    passed = sum(r["status"] == "pass" for r in doc["relations"])
    lines.append(f"{passed}/{len(doc['relations'])} passed")
    _emit(doc, "\n".join(lines), args.format, out)
    return 0 if doc["ok"] else 1


def cmd_paths(args, out):
    A = _subset(args.subset, args.n)
    return _emit_report(path_consistency(A, generate_paths(A)), args.format, out)


def _matrix_text(m):
    return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in m)


def cmd_eval(args, out):
    rep = numeric.load_rep(args.rep)
    report = numeric.check_rep(rep)
    x = tensor.evaluate(args.expr)
    matrix = numeric.evaluate(x, rep, args.memory_budget)
    norm = numeric.max_entry(matrix)
    doc = {
        "representation": report.to_dict(),
        "expr": args.expr,
        "arity": x.arity,
        "max_abs_entry": str(norm),
        "matrix": [[str(v) for v in row] for row in matrix],
    }
    text = "\n".join(
        [report.format(), f"rho({args.expr}) =", _matrix_text(matrix), f"max |entry| = {norm}"]
    )
    _emit(doc, text, args.format, out)
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="ospbi", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("relations", parents=[common], help="defining relations of U(osp(1|2))")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("r-properties", parents=[common], help="R-matrix identities")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_r_properties)

    p = sub.add_parser("casimir", parents=[common], help="print C_A in normal form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", required=True, help="comma separated, e.g. 1,3")
    p.add_argument("--explicit", action="store_true", help="also build the explicit embedding")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("verify-bi", parents=[common], help="Bannai-Ito relations for all pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--diagnostics", action="store_true", help="include the Cbar_13 control")
    p.add_argument("--timings", action="store_true", help="add wall-clock timings (not byte-stable)")
    p.set_defaults(func=cmd_verify_bi)

    p = sub.add_parser("paths", parents=[common], help="path independence of C_A")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression on a representation")
    p.add_argument("--rep", default=None, help="representation file (default: bundled)")
    p.add_argument("--expr", required=True)
    p.add_argument("--memory-budget", type=int, default=None,
                   help="bytes allowed for the dim^n matrix (default: $BI_MEMORY_BUDGET or 256 MiB)")
    p.set_defaults(func=cmd_eval)
    return parser


def _validate(args):
    n = getattr(args, "n", None)
    if n is not None and n < 1:
        raise UsageError("--n must be positive")
    if args.verb == "r-properties" and not 2 <= n <= 4:
        raise UsageError("r-properties supports 2 <= n <= 4")
    if args.verb == "verify-bi" and n < 2:
        raise UsageError("verify-bi needs n >= 2")
    if getattr(args, "jobs", 1) < 1:
        raise UsageError("--jobs must be positive")
    if getattr(args, "memory_budget", None) is not None and args.memory_budget < 1:
        raise UsageError("--memory-budget must be positive")
    if hasattr(args, "subset"):
        _subset(args.subset, n)


def run(argv=None, out=None, err=None):
    """Execute one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        _validate(args)
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
