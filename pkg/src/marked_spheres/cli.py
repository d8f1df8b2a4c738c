"""Command-line front end.

Exit codes: 0 on success, 2 for invalid arguments, 3 when a closed form and an
independent computation disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import branchlocus, fixedloci, oracle, reallocus
from .action import CertificationError, CrossCheckError
from .perm import involution
from .scalars import parse_scalar

EXIT_OK, EXIT_USAGE, EXIT_CROSSCHECK = 0, 2, 3


class UsageError(ValueError):
    pass


def _emit(payload: dict, fmt: str, table: list[str], dot: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload, ensure_ascii=False)
    if fmt == "dot":
        if dot is None:
            raise UsageError("this command has no DOT output")
        return dot.rstrip("\n")
    return "\n".join(table)


def _resolve_n(args) -> int:
    if getattr(args, "genus", None) is not None:
        if args.n is not None:
            raise UsageError("give either n or --genus, not both")
        return 2 * args.genus + 1
    if args.n is None:
        raise UsageError("n is required")
    if args.n < 4:
        raise UsageError(f"need n >= 4, got {args.n}")
    return args.n


def cmd_branch(args) -> str:
    n = _resolve_n(args)
    graph = branchlocus.stratum_graph(n)
    count = branchlocus.branch_component_count(n)
    payload = {"n": n, "count": count, **graph.to_dict()}
    table = [f"n={n}  components={count}"] + [
        f"  {i + 1}: " + " ".join(comp) for i, comp in enumerate(graph.components())
    ]
    return _emit(payload, args.format, table, graph.to_dot())


def cmd_real(args) -> str:
    n = _resolve_n(args)
    graph = reallocus.intersection_graph(n)
    count = reallocus.real_component_count(n)
    payload = {"n": n, "count": count, **graph.to_dict()}
    table = [f"n={n}  components={count}"] + [
        f"  {i + 1}: {{" + ", ".join(comp) + "}" for i, comp in enumerate(graph.components())
    ]
    return _emit(payload, args.format, table, graph.to_dot())


def cmd_census(args) -> str:
    lo, hi = args.lo, args.hi
    if lo < 4 or hi < lo:
        raise UsageError("need 4 <= --from <= --to")
    if args.branch:
        count_of, graph_of = branchlocus.branch_component_count, branchlocus.stratum_graph
    else:
        count_of, graph_of = reallocus.real_component_count, reallocus.intersection_graph
    rows = []
    for n in range(lo, hi + 1):
        count = count_of(n)
        rows.append({"n": n, "count": count, "components": graph_of(n).components()})
    disconnected = [r["n"] for r in rows if r["count"] > 1]
    payload = {
        "locus": "branch" if args.branch else "real",
        "rows": rows,
        "disconnected": disconnected,
    }
    table = [f"{'n':>5} {'count':>6}  status"]
    table += [
        f"{r['n']:>5} {r['count']:>6}  {'disconnected' if r['count'] > 1 else 'connected'}"
        for r in rows
    ]
    table.append(f"disconnected: {len(disconnected)}")
    return _emit(payload, args.format, table)


def _scalars(texts: Sequence[str] | None) -> list:
    return [parse_scalar(t) for t in (texts or [])]


def _seed(text: str):
    # a bare decimal is an angle on a circle, anything else a scalar
    if "," not in text and any(ch in text for ch in ".eE"):
        return float(text)
    return parse_scalar(text)


def cmd_witness(args) -> str:
    kind = args.kind
    p = args.params
    try:
        if kind == "fixed":
            if len(p) != 4:
                raise UsageError("witness fixed M R CASE N")
            m, r, case, n = int(p[0]), int(p[1]), p[2].upper(), int(p[3])
            free = _scalars(args.free) or fixedloci.default_free(m, r)
            cert = fixedloci.witness(m, r, case, n, alpha=args.alpha, free=free, sign=args.sign)
            payload = cert.to_dict()
            payload["class"] = [m, r, case]
        elif kind == "real":
            if len(p) != 2:
                raise UsageError("witness real N (BETA|A1|A2|A3)")
            seeds = [_seed(t) for t in args.seeds] if args.seeds else None
            payload = reallocus.real_witness(int(p[0]), p[1], seeds).to_dict()
        elif kind == "dihedral":
            if len(p) != 3:
                raise UsageError("witness dihedral N BETA1 BETA2")
            payload = oracle.dihedral_witness(*(int(x) for x in p), seed=args.seed).to_dict()
        elif kind == "klein":
            if len(p) != 1:
                raise UsageError("witness klein N")
            payload = oracle.klein_witness(int(p[0])).to_dict()
        else:
            raise UsageError(f"unknown witness kind {kind!r}")
    except (TypeError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    table = [f"{k}: {v}" for k, v in payload.items()]
    return _emit(payload, args.format, table)


def verify_range(lo: int, hi: int) -> list[dict]:
    """Pairs where the closed criterion and the reflection-count oracle disagree."""
    mismatches = []
    for n in range(lo, hi + 1):
        top = reallocus.max_beta(n)
        for b1 in range(top + 1):
            for b2 in range(b1 + 1, top + 1):
                crit = reallocus.intersects(n, b1, b2)
                orc = bool(oracle.delta_system_solve(n, b1, b2))
                if crit != orc:
                    mismatches.append({"n": n, "betas": [b1, b2], "criterion": crit, "oracle": orc})
    return mismatches


def cmd_verify(args) -> tuple[str, int]:
    lo = args.n
    hi = args.to if args.to is not None else lo
    if lo < 4 or hi < lo:
        raise UsageError("need 4 <= n <= --to")
    mismatches = verify_range(lo, hi)
    payload = {"from": lo, "to": hi, "mismatches": mismatches, "ok": not mismatches}
    table = [f"n in [{lo}, {hi}]: {len(mismatches)} mismatches"]
    table += [
        f"  n={m['n']} betas={tuple(m['betas'])} criterion={m['criterion']} oracle={m['oracle']}"
        for m in mismatches
    ]
    return _emit(payload, args.format, table), EXIT_OK if not mismatches else EXIT_CROSSCHECK


def cmd_strata(args) -> str:
    n = args.n
    strata = branchlocus.enumerate_strata(n)
    rows = []
    for s in strata:
        rep = fixedloci.fixed_locus_report(s.m, s.r, s.case, n)
        rows.append(
            {
                "label": s.label,
                "m": s.m,
                "r": s.r,
                "case": s.case,
                "dimension": rep.dimension,
                "fixed_components": rep.component_count,
            }
        )
    payload = {"n": n, "strata": rows}
    table = [f"{'label':<10} case  dim  fix-components"]
    table += [f"{r['label']:<10} {r['case']:>4} {r['dimension']:>4}  {r['fixed_components']}" for r in rows]
    return _emit(payload, args.format, table)


def cmd_symmetries(args) -> str:
    n = args.n
    top = reallocus.max_beta(n)
    rows = []
    for beta in range(top + 1):
        row = {"beta": beta, "twist": str(involution(beta, n + 1))}
        # the fixed set of the twist with n+1 = 2β splits by the sign and size of λ₁
        row["pieces"] = ["A1", "A2", "A3"] if 2 * beta == n + 1 else [f"F_{beta}"]
        rows.append(row)
    payload = {"n": n, "count": reallocus.symmetry_class_count(n), "classes": rows}
    table = [f"n={n}  symmetry classes={payload['count']}"]
    table += [f"  beta={r['beta']:<3} twist={r['twist']:<24} {' '.join(r['pieces'])}" for r in rows]
    return _emit(payload, args.format, table)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "dot", "table"), default="table")

    parser = argparse.ArgumentParser(prog="marked-spheres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("branch", "branch locus components"), ("real", "real locus components")):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("n", type=int, nargs="?")
        p.add_argument("--genus", type=int, help="use n = 2g + 1")

    p = sub.add_parser("census", parents=[fmt], help="component counts over a range of n")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--branch", action="store_true")
    which.add_argument("--real", action="store_true")

    p = sub.add_parser("witness", parents=[fmt], help="certified witness point")
    p.add_argument("kind", choices=("fixed", "real", "dihedral", "klein"))
    p.add_argument("params", nargs="+")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--free", nargs="*", help='free values as "re,im"')
    p.add_argument("--seeds", nargs="*", help='seed values as "re,im" (real values are angles on circles)')
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", parents=[fmt], help="criterion vs oracle sweep")
    p.add_argument("n", type=int)
    p.add_argument("--to", type=int)

    for name in ("strata", "symmetries"):
        p = sub.add_parser(name, parents=[fmt])
        p.add_argument("n", type=int)
    return parser


_COMMANDS = {
    "branch": cmd_branch,
    "real": cmd_real,
    "census": cmd_census,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "strata": cmd_strata,
    "symmetries": cmd_symmetries,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    code = EXIT_OK
    try:
        result = _COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, code = result
    except (CrossCheckError, CertificationError) as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(result, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
