"""Command-line front end: compute certified bounds, run the exact oracle
and the reduction verifier, emit SDPA files, and reproduce slices of the
published bound table.

Exit codes: 0 success, 2 argument validation error, 3 solver failure,
4 verification or table mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from mixedsdp.blocks import verify_reduction
from mixedsdp.codes import DEFAULT_WORD_CAP, ProblemSpec, ResourceError, exact_n
from mixedsdp.model import build_lp_k2, build_sdp, derived_doubling_bound
from mixedsdp.solver import SolverError, certify, emit_sdpa, solve

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SOLVER = 3
EXIT_VERIFY = 4

DEFAULT_STORE = "mixedsdp_results.jsonl"
STORE_ENV = "MIXEDSDP_STORE"


@dataclass(frozen=True)
class ReferenceRow:
    n2: int
    n3: int
    d: int
    lower: int | None
    upper: int
    prev: int | None
    marker: str

    @property
    def length(self) -> int:
        return self.n2 + self.n3


def load_reference_rows() -> list[ReferenceRow]:
    """The packaged table of published bounds."""
    text = resources.files("mixedsdp").joinpath("data/reference_bounds.json").read_text()
    doc = json.loads(text)
    return [ReferenceRow(**row) for row in doc["rows"]]


class ResultsStore:
    """Append-only JSON-lines store of bound records keyed by (n2,n3,d,k)."""

    def __init__(self, path: str | os.PathLike | None = None):
        if path is None:
            path = os.environ.get(STORE_ENV, DEFAULT_STORE)
        self.path = Path(path)

    def append(self, record: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        for line in self.path.read_text().splitlines():
            line = line.strip()
            if line:
                out.append(json.loads(line))
        return out

    def latest(self, n2: int, n3: int, d: int, k: int) -> dict | None:
        found = None
        for rec in self.records():
            if (rec.get("n2"), rec.get("n3"), rec.get("d"), rec.get("k")) == (n2, n3, d, k):
                found = rec
        return found


def _compute_bound(n2: int, n3: int, d: int, k: int, tol: float, max_iter: int = 500):
    spec = ProblemSpec(n2, n3, d, k)
    problem = build_sdp(spec) if k == 3 else build_lp_k2(spec)
    solution = solve(problem, tol=tol, max_iter=max_iter)
    bound = certify(problem, solution)
    record = {
        "n2": n2, "n3": n3, "d": d, "k": k,
        "objective": solution.objective,
        "dualObjective": solution.dual_objective,
        "bound": bound.value,
        "guard": bound.guard,
        "gap": solution.gap,
        "iterations": solution.iterations,
        "provenance": bound.provenance,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    return record


def cmd_bound(args) -> int:
    spec = ProblemSpec(args.n2, args.n3, args.d, args.k)
    if args.emit_only:
        problem = build_sdp(spec) if args.k == 3 else build_lp_k2(spec)
        path = emit_sdpa(problem, args.emit_only)
        print(f"emitted {path}")
        return EXIT_OK
    record = _compute_bound(args.n2, args.n3, args.d, args.k, args.tol, args.max_iter)
    ResultsStore(args.store).append(record)
    print(
        f"N({args.n2},{args.n3},{args.d}) <= {record['bound']}  "
        f"[k={args.k}, objective {record['objective']:.9g}, "
        f"gap {record['gap']:.2e}, guard {record['guard']:.2e}]"
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = ProblemSpec(args.n2, args.n3, args.d)
    value = exact_n(spec, cap=args.cap)
    print(f"N({args.n2},{args.n3},{args.d}) = {value}  [exact clique search]")
    return EXIT_OK


def cmd_verify(args) -> int:
    dvals = [args.d] if args.d else range(1, args.n2 + args.n3 + 1)
    failures = 0
    for d in dvals:
        report = verify_reduction(ProblemSpec(args.n2, args.n3, d), trials=args.trials)
        print(report.summary())
        if not report.passed:
            failures += 1
            print(f"first discrepancy: {report.first_failure()}")
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_emit(args) -> int:
    spec = ProblemSpec(args.n2, args.n3, args.d, args.k)
    problem = build_sdp(spec) if args.k == 3 else build_lp_k2(spec)
    path = emit_sdpa(problem, args.path)
    print(f"emitted {path}")
    return EXIT_OK


def _table_worker(task):
    n2, n3, d, tol = task
    try:
        return (n2, n3, d), _compute_bound(n2, n3, d, 3, tol)
    except SolverError as exc:
        return (n2, n3, d), {"error": f"{type(exc).__name__}: {exc}"}


def cmd_table(args) -> int:
    rows = load_reference_rows()
    if args.d:
        rows = [r for r in rows if r.d == args.d]
    by_key = {(r.n2, r.n3, r.d): r for r in load_reference_rows()}

    if args.derived:
        print(f"{'n2':>3} {'n3':>3} {'d':>3} {'doubled':>9} {'published':>9}  note")
        mismatches = 0
        for r in rows:
            src = by_key.get((r.n2 - 1, r.n3, r.d))
            if src is None or src.marker == "doubling":
                continue
            derived = derived_doubling_bound(
                ProblemSpec(r.n2 - 1, r.n3, r.d), src.upper
            )
            note = "match" if derived == r.upper else (
                "improves" if derived < r.upper else "weaker"
            )
            print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {derived:>9} {r.upper:>9}  {note}")
        return EXIT_OK

    rows = [r for r in rows if r.length <= args.max_length]
    store = ResultsStore(args.store)
    computed: dict[tuple, dict] = {}
    todo = [
        (r.n2, r.n3, r.d, args.tol)
        for r in rows
        if r.marker == "" and not args.replay
    ]
    if args.jobs > 1 and todo:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for key, record in pool.map(_table_worker, todo):
                computed[key] = record
    else:
        for task in todo:
            key, record = _table_worker(task)
            computed[key] = record

    print(f"{'n2':>3} {'n3':>3} {'d':>3} {'lower':>7} {'computed':>9} {'published':>9}  status")
    mismatches = 0
    failures = 0
    for r in rows:
        key = (r.n2, r.n3, r.d)
        if r.marker == "k4":
            print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {r.lower or '':>7} {'-':>9} {r.upper:>9}  level-4 bound, not computed")
            continue
        if r.marker == "doubling":
            src = by_key.get((r.n2 - 1, r.n3, r.d))
            if src:
                derived = derived_doubling_bound(ProblemSpec(r.n2 - 1, r.n3, r.d), src.upper)
                status = "match (doubling)" if derived == r.upper else "MISMATCH (doubling)"
                mismatches += status.startswith("MISMATCH")
                print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {r.lower or '':>7} {derived:>9} {r.upper:>9}  {status}")
            continue
        if args.replay:
            rec = store.latest(r.n2, r.n3, r.d, 3)
            if rec is None:
                print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {r.lower or '':>7} {'-':>9} {r.upper:>9}  not in store")
                continue
        else:
            rec = computed.get(key)
            if rec is None:
                continue
            if "error" in rec:
                failures += 1
                print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {r.lower or '':>7} {'!':>9} {r.upper:>9}  {rec['error']}")
                continue
            store.append(rec)
        status = "match" if rec["bound"] == r.upper else (
            "improves" if rec["bound"] < r.upper else "MISMATCH"
        )
        mismatches += status == "MISMATCH"
        print(f"{r.n2:>3} {r.n3:>3} {r.d:>3} {r.lower or '':>7} {rec['bound']:>9} {r.upper:>9}  {status}")
    if failures:
        return EXIT_SOLVER
    return EXIT_VERIFY if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedsdp",
        description="Certified SDP upper bounds for mixed binary/ternary codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="compute a certified upper bound")
    p.add_argument("n2", type=int)
    p.add_argument("n3", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--k", type=int, choices=(2, 3), default=3)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=500)
    p.add_argument("--emit-only", metavar="PATH", help="write the SDPA file and stop")
    p.add_argument("--store", help=f"results store path (default ${STORE_ENV} or {DEFAULT_STORE})")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("oracle", help="exact maximum code size by clique search")
    p.add_argument("n2", type=int)
    p.add_argument("n3", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="brute-force check of the reduction engine")
    p.add_argument("n2", type=int)
    p.add_argument("n3", type=int)
    p.add_argument("--d", type=int, help="single distance (default: all)")
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="compare computed bounds against the published table")
    p.add_argument("--d", type=int)
    p.add_argument("--max-length", type=int, default=9)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--replay", action="store_true", help="read bounds from the store instead of solving")
    p.add_argument("--derived", action="store_true", help="list doubling-derived bounds")
    p.add_argument("--store", help="results store path")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("emit", help="write the problem in SDPA sparse format")
    p.add_argument("n2", type=int)
    p.add_argument("n3", type=int)
    p.add_argument("d", type=int)
    p.add_argument("path")
    p.add_argument("--k", type=int, choices=(2, 3), default=3)
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SolverError as exc:
        print(f"solver error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
