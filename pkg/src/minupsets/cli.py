"""Command-line front end.

Exit codes: 0 success, 1 infeasible input where feasibility is required,
2 parse error, 3 counting methods disagree, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import counting, oracle
from .score_core import denormalize, normalize, upset_multisets, validate_feasible
from .tournaments import apply_tuple, enumerate_feasible_tuples
from .uniqueness import Decomposition, Segment, decompose

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_DISAGREE = 3
EXIT_VERIFY = 4

LIST_MAX_N = 18
CLOSED_REL_TOL = 1e-6


class ParseError(ValueError):
    pass


def parse_scores(text: str) -> List[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ParseError(f"cannot parse score list {text!r}: expected comma-separated integers")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"cannot parse score list {text!r}: expected comma-separated integers") from None


def _decomposition_json(d: Decomposition) -> list:
    out = []
    for item in d.items:
        if isinstance(item, Segment):
            out.append({"type": "segment", "peak": item.peak, "middle_zeros": item.middle_zeros})
        else:
            out.append({"type": "zeros", "length": item.length})
    return out


def _emit(args, command: str, inp: dict, result: dict, text_lines: List[str]) -> None:
    if args.format == "json":
        doc = {"command": command, "input": inp, "result": result}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def cmd_analyze(args) -> int:
    scores = parse_scores(args.scores)
    report = validate_feasible(scores)
    h = list(normalize(scores))
    result = {
        "feasible": report.accepted,
        "violation": None if report.accepted else {
            "kind": report.violation.value, "index": report.index, "detail": report.detail,
        },
        "normalized": h,
    }
    lines = [f"scores:      {','.join(map(str, scores))}", f"normalized:  {','.join(map(str, h))}"]
    if not report.accepted:
        result.update({"verdict": "infeasible", "ell": None, "x": None, "y": None, "unique": None,
                       "decomposition": None, "fail_position": None})
        lines.append(f"verdict:     infeasible ({report.violation.value} at {report.index}: {report.detail})")
        _emit(args, "analyze", {"scores": scores}, result, lines)
        return EXIT_OK
    ms = upset_multisets(scores)
    d = decompose(h)
    unique = isinstance(d, Decomposition)
    result.update({
        "verdict": "feasible",
        "ell": ms.ell,
        "x": [[i, m] for i, m in ms.x_indices],
        "y": [[j, m] for j, m in ms.y_indices],
        "unique": unique,
        "decomposition": _decomposition_json(d) if unique else None,
        "fail_position": None if unique else d.position,
    })
    lines += [
        "verdict:     feasible",
        f"min upsets:  {ms.ell}",
        "X:           " + " ".join(f"{i}^{m}" for i, m in ms.x_indices),
        "Y:           " + " ".join(f"{j}^{m}" for j, m in ms.y_indices),
        f"unique:      {'yes' if unique else 'no'}",
        f"decomposition: {d}" if unique else f"not decomposable at position {d.position}",
    ]
    _emit(args, "analyze", {"scores": scores}, result, lines)
    return EXIT_OK


def cmd_matrices(args) -> int:
    scores = parse_scores(args.scores)
    report = validate_feasible(scores)
    if not report:
        print(f"infeasible score sequence: {report.detail}", file=sys.stderr)
        return EXIT_INFEASIBLE
    tuples = enumerate_feasible_tuples(scores)
    shown = tuples if args.limit is None else tuples[: args.limit]
    truncated = len(shown) < len(tuples)
    n = len(scores)
    items = []
    lines = []
    for k, t in enumerate(shown, 1):
        m = apply_tuple(n, t)
        items.append({"tuple": [list(p) for p in t], "rows": m.to_text().splitlines()})
        lines.append(f"# matrix {k}: " + " ".join(f"({i},{j})" for i, j in t))
        lines.append(m.to_text())
        lines.append("")
    if truncated:
        lines.append(f"# truncated: {len(shown)} of {len(tuples)} shown")
    else:
        lines.append(f"# total: {len(tuples)}")
    result = {"total": len(tuples), "shown": len(shown), "truncated": truncated, "matrices": items}
    _emit(args, "matrices", {"scores": scores, "limit": args.limit}, result, lines)
    return EXIT_OK


def cmd_count(args) -> int:
    n = args.n
    if n < 1:
        print("n must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    if args.list and n > LIST_MAX_N:
        print(f"--list supports n <= {LIST_MAX_N}", file=sys.stderr)
        return EXIT_PARSE
    methods = ["recurrence", "linear", "closed"] if args.method == "all" else [args.method]
    values: dict = {}
    closed = None
    if "recurrence" in methods:
        values["recurrence"] = counting.count_unique_recurrence(n)
    if "linear" in methods:
        values["linear"] = counting.count_unique_linear(n)
    if "closed" in methods:
        try:
            closed = counting.count_unique_closed(n)
            values["closed"] = closed.value
        except OverflowError:
            values["closed"] = None
    exact = sorted({v for k, v in values.items() if k != "closed"})
    agree = len(exact) <= 1
    if agree and closed is not None and exact:
        # float evaluation is only trusted to a relative tolerance
        agree = abs(closed.raw - exact[0]) <= CLOSED_REL_TOL * exact[0]
    result = {"n": n, "values": values, "agree": agree}
    lines = [f"a_{n} ({name}) = {v if v is not None else 'overflow'}" for name, v in values.items()]
    if closed is not None:
        result["closed_residual"] = closed.residual
        lines.append(f"closed-form residual: {closed.residual:.3e}")
    if args.list:
        seqs = [list(denormalize(h)) for h in counting.enumerate_unique_normvecs(n)]
        result["sequences"] = seqs
        lines += [",".join(map(str, s)) for s in seqs]
    if not agree:
        lines.append("ERROR: counting methods disagree")
    _emit(args, "count", {"n": n, "method": args.method, "list": args.list}, result, lines)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_verify(args) -> int:
    suites = ["census", "count", "families"] if args.suite == "all" else [args.suite]
    report = oracle.VerificationReport()
    if "census" in suites:
        for n in range(1, (args.max_n or 6) + 1):
            report.extend(oracle.verify_theorems(n))
    if "count" in suites:
        report.extend(oracle.verify_count(args.max_n or 12))
    if "families" in suites:
        report.extend(oracle.verify_families(args.max_n or 20))
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.cases} cases)"
        + "".join(f"\n    counterexample: {json.dumps(x)}" for x in c.counterexamples)
        for c in report.checks
    ]
    lines.append("all checks passed" if report.passed else "VERIFICATION FAILED")
    _emit(args, "verify", {"suite": args.suite, "max_n": args.max_n}, report.to_dict(), lines)
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="minupsets", description="Minimum-upset tournaments of score sequences."
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[fmt], help="feasibility, upsets and uniqueness of a score sequence")
    p.add_argument("scores", help="comma-separated scores, e.g. 2,2,2,2,2,5,6,7,9,9,9")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("matrices", parents=[fmt], help="all minimum-upset tournament matrices")
    p.add_argument("scores")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("count", parents=[fmt], help="number of uniquely minimized score sequences of length n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["recurrence", "linear", "closed", "all"], default="all")
    p.add_argument("--list", action="store_true", help=f"also list the sequences (n <= {LIST_MAX_N})")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[fmt], help="brute-force and family checks")
    p.add_argument("--suite", choices=["census", "count", "families", "all"], default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        # out-of-range bounds for the oracle suites
        print(str(e), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
