"""Command-line harness: reproducible verification experiments with reports.

Subcommands
    verify          strong k-connectivity of Eulerian orientations (k = d/2),
                    exhaustively for d <= 4 or over seeded samples for d in {4, 6}
    harper          table of minimum-boundary values against the expansion bound
    construct       write the recursive strongly-k-connected orientation
    counterexample  smooth but not strongly connected orientation of Q_3
    enumerate       count all Eulerian orientations at small dimension
    facts           run the isoperimetric inequality sweeps

Reports are JSON on stdout (deterministic for fixed parameters and seed,
byte-identical apart from the duration field); harper emits CSV by default.
Exit status is 0 exactly when no case failed and no error occurred.  The
environment variable CUBE_ORIENT_JOBS overrides the --jobs flag.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .connectivity import is_strongly_k_node_connected
from .cube import (
    InfeasibleError,
    Orientation,
    deserialize,
    is_eulerian_orientation,
    is_smooth,
    load,
    neighbors,
    save,
    serialize,
    to_text,
)
from .generate import (
    SamplerConfig,
    enumerate_eulerian_orientations,
    find_smooth_not_strongly_connected,
    inductive_orientation,
    sample_eulerian_orientations,
)
from .connectivity import strongly_connected
from .isoperimetry import (
    check_expansion_condition,
    harper_boundary,
    min_boundary_bruteforce,
    shadow_exceeds_segment,
    simplicial_order,
    verify_boundary_inequalities,
)


@dataclass
class ExperimentReport:
    """Aggregated outcome of one experiment run."""

    experiment: str
    parameters: dict
    passed: int
    failed: int
    total: int
    witnesses: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    duration_seconds: float = 0.0

    def __post_init__(self):
        if self.passed + self.failed != self.total:
            raise ValueError("pass and fail counts must sum to the total")
        if self.failed > 0 and not self.witnesses:
            raise ValueError("failing experiments must carry a witness")

    def to_json(self) -> dict:
        return {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "passed": self.passed,
            "failed": self.failed,
            "total": self.total,
            "witnesses": self.witnesses,
            "results": self.results,
            "duration_seconds": self.duration_seconds,
        }


def _resolve_jobs(flag: int | None) -> int:
    env = os.environ.get("CUBE_ORIENT_JOBS")
    if env:
        return max(1, int(env))
    return max(1, flag or 1)


class _ConnectivityViolation(Exception):
    """Internal abort signal carrying a failing orientation."""

    def __init__(self, index, orientation, report):
        super().__init__("connectivity check failed")
        self.index = index
        self.orientation = orientation
        self.report = report


def _persist_witness(o: Orientation, report, index: int, out_dir: str | None) -> dict:
    directory = out_dir or "."
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"witness-d{o.d}-{index}.cubeorient")
    save(o, path)
    return {
        "sample_index": index,
        "orientation_file": path,
        "orientation": to_text(o),
        "connectivity": report.to_json(),
    }


def _check_sample(args):
    d, k, blob, index = args
    report = is_strongly_k_node_connected(deserialize(blob, d), k)
    return index, report.verdict, blob


def run_verify(
    d: int,
    mode: str,
    samples: int = 100,
    seed: int = 0,
    steps: int | None = None,
    jobs: int = 1,
    out_dir: str | None = None,
    k: int | None = None,
) -> ExperimentReport:
    """Engine behind the verify subcommand.

    Checks strong k-connectivity (k defaults to d/2) of every generated
    Eulerian orientation.  A failing case persists a replayable witness file
    and aborts the remaining work.
    """
    if d % 2:
        raise InfeasibleError("verification runs on even-degree hypercubes")
    if mode == "exhaustive":
        if d > 4:
            raise InfeasibleError(f"exhaustive mode supported for d <= 4, got {d}")
    elif mode == "sample":
        if d not in (4, 6):
            raise InfeasibleError(f"sample mode supported for d in {{4, 6}}, got {d}")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    k = d // 2 if k is None else k
    started = time.monotonic()
    parameters = {
        "dim": d,
        "k": k,
        "mode": mode,
        "samples": samples if mode == "sample" else None,
        "seed": seed if mode == "sample" else None,
        "steps": steps,
        "jobs": jobs,
    }

    checked = 0
    witnesses: list[dict] = []

    if mode == "exhaustive":
        def visit(o: Orientation) -> None:
            nonlocal checked
            report = is_strongly_k_node_connected(o, k)
            if not report.verdict:
                raise _ConnectivityViolation(checked, o, report)
            checked += 1

        try:
            total = enumerate_eulerian_orientations(d, visitor=visit)
        except _ConnectivityViolation as violation:
            witnesses.append(
                _persist_witness(violation.orientation, violation.report, violation.index, out_dir)
            )
            total = checked + 1
        results = {"count": total}
    else:
        cfg = SamplerConfig(seed=seed, steps=steps)
        blobs = [serialize(o) for o in sample_eulerian_orientations(d, samples, cfg)]
        total = len(blobs)
        if jobs <= 1:
            for index, blob in enumerate(blobs):
                report = is_strongly_k_node_connected(deserialize(blob, d), k)
                if not report.verdict:
                    witnesses.append(
                        _persist_witness(deserialize(blob, d), report, index, out_dir)
                    )
                    break
                checked += 1
            if witnesses:
                total = checked + 1  # remaining samples aborted
        else:
            tasks = [(d, k, blob, index) for index, blob in enumerate(blobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(_check_sample, tasks, chunksize=16))
            failures = sorted(
                (index, blob) for index, ok, blob in outcomes if not ok
            )
            checked = sum(1 for _, ok, _ in outcomes if ok)
            for index, blob in failures:
                o = deserialize(blob, d)
                witnesses.append(
                    _persist_witness(o, is_strongly_k_node_connected(o, k), index, out_dir)
                )
        results = {"count": total}

    return ExperimentReport(
        experiment="verify",
        parameters=parameters,
        passed=checked,
        failed=total - checked,
        total=total,
        witnesses=witnesses,
        results=results,
        duration_seconds=time.monotonic() - started,
    )


def harper_rows(n: int, m_max: int) -> list[dict]:
    """Rows (m, harper, oracle, bound, bound_ok) for the boundary table.

    The oracle column is full subset enumeration for n <= 4 and the explicit
    Hamming-ball segment (maintained incrementally) for n <= 12; blank above.
    """
    if n % 2 or not 2 <= n <= 16:
        raise InfeasibleError(f"table supported for even n <= 16, got {n}")
    if not 1 <= m_max <= 1 << (n - 1):
        raise InfeasibleError(f"m_max must be in 1..2^{n - 1}, got {m_max}")
    k = n // 2
    use_bruteforce = n <= 4
    use_ball = n <= 12
    rows = []
    segment = 0
    boundary = 0
    order = simplicial_order(n) if use_ball else None
    for m in range(1, m_max + 1):
        value = harper_boundary(m, n)
        oracle: int | None = None
        if use_bruteforce:
            oracle = min_boundary_bruteforce(m, n)
        elif use_ball:
            v = next(order)
            segment |= 1 << v
            boundary = (boundary | neighbors(v, n)) & ~segment
            oracle = boundary.bit_count()
        bound = min(k * k - 1, (k - 1) * (m + 1))
        rows.append(
            {
                "m": m,
                "harper": value,
                "oracle": oracle,
                "bound": bound,
                "bound_ok": value > bound,
            }
        )
    return rows


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "harper", "oracle", "bound", "bound_ok"])
    for row in rows:
        oracle = "" if row["oracle"] is None else row["oracle"]
        writer.writerow([row["m"], row["harper"], oracle, row["bound"], str(row["bound_ok"]).lower()])
    return buf.getvalue()


def run_construct(k: int, out_path: str) -> ExperimentReport:
    """Write the recursive orientation of Q_2k; verify connectivity for k <= 3."""
    started = time.monotonic()
    o = inductive_orientation(k)
    save(o, out_path)
    checks = {"eulerian": is_eulerian_orientation(o)}
    verified: bool | None = None
    if k <= 3:
        verified = is_strongly_k_node_connected(o, k).verdict
        checks["strongly_k_connected"] = verified
    passed = sum(1 for ok in checks.values() if ok)
    total = len(checks)
    witnesses = []
    if passed != total:
        witnesses.append(
            {"orientation_file": out_path, "orientation": to_text(o), "checks": checks}
        )
    return ExperimentReport(
        experiment="construct",
        parameters={"k": k, "dim": 2 * k, "out": out_path},
        passed=passed,
        failed=total - passed,
        total=total,
        witnesses=witnesses,
        results={"path": out_path, "verified": verified, "checks": checks},
        duration_seconds=time.monotonic() - started,
    )


def run_counterexample(out_path: str) -> ExperimentReport:
    """Find, persist, and replay the smooth non-strongly-connected Q_3 witness."""
    started = time.monotonic()
    o = find_smooth_not_strongly_connected(3)
    checks = {}
    if o is None:
        checks["witness_found"] = False
    else:
        save(o, out_path)
        replayed = load(out_path)
        checks = {
            "witness_found": True,
            "smooth": is_smooth(replayed),
            "not_strongly_connected": not strongly_connected(replayed),
            "not_eulerian": not is_eulerian_orientation(replayed),
            "replay_identical": replayed == o,
        }
    passed = sum(1 for ok in checks.values() if ok)
    total = len(checks)
    witnesses = []
    if passed != total:
        witnesses.append({"checks": checks})
    return ExperimentReport(
        experiment="counterexample",
        parameters={"dim": 3, "out": out_path},
        passed=passed,
        failed=total - passed,
        total=total,
        witnesses=witnesses,
        results={
            "path": out_path if o is not None else None,
            "orientation": to_text(o) if o is not None else None,
            "checks": checks,
        },
        duration_seconds=time.monotonic() - started,
    )


def run_enumerate(d: int, cross_check: bool = False) -> ExperimentReport:
    """Count Eulerian orientations, optionally under two DFS edge orders."""
    started = time.monotonic()
    count = enumerate_eulerian_orientations(d)
    results: dict = {"count": count}
    ok = True
    if cross_check:
        alt = enumerate_eulerian_orientations(d, edge_order="dim-major")
        results["count_dim_major"] = alt
        ok = alt == count
    witnesses = [] if ok else [{"counts": results}]
    return ExperimentReport(
        experiment="enumerate",
        parameters={"dim": d, "cross_check": cross_check},
        passed=1 if ok else 0,
        failed=0 if ok else 1,
        total=1,
        witnesses=witnesses,
        results=results,
        duration_seconds=time.monotonic() - started,
    )


def run_facts(k: int) -> ExperimentReport:
    """Run the expansion-condition and inequality sweeps for one k."""
    started = time.monotonic()
    checks = {
        "expansion_condition": check_expansion_condition(k),
        "boundary_inequalities": verify_boundary_inequalities(k),
    }
    shadow_ok = True
    for r in range(k + 1, 2 * k - 1):
        for m_prime in range(1, comb(2 * k, r) + 1):
            if not shadow_exceeds_segment(m_prime, r, k):
                shadow_ok = False
    checks["shadow_sweep"] = shadow_ok
    passed = sum(1 for ok in checks.values() if ok)
    total = len(checks)
    witnesses = [] if passed == total else [{"checks": checks}]
    return ExperimentReport(
        experiment="facts",
        parameters={"k": k},
        passed=passed,
        failed=total - passed,
        total=total,
        witnesses=witnesses,
        results={"checks": checks},
        duration_seconds=time.monotonic() - started,
    )


def _print_report(report: ExperimentReport) -> None:
    print(json.dumps(report.to_json(), indent=2, sort_keys=True))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubeorient", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check strong k-connectivity of Eulerian orientations")
    p.add_argument("--dim", type=int, required=True, help="hypercube dimension (even)")
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--samples", type=int, default=100, help="sample count (sample mode)")
    p.add_argument("--seed", type=int, default=0, help="sampler seed")
    p.add_argument("--steps", type=int, default=None, help="cycle reversals between samples")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (sample mode)")
    p.add_argument("--out", default=None, help="directory for witness files on failure")

    p = sub.add_parser("harper", help="minimum-boundary table with oracle and bound columns")
    p.add_argument("--dim", type=int, required=True, help="ambient dimension n (even)")
    p.add_argument("--m-max", type=int, required=True, help="largest set size tabulated")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="write the table here instead of stdout")

    p = sub.add_parser("construct", help="write the recursive strongly-k-connected orientation")
    p.add_argument("--k", type=int, required=True, help="connectivity level (dimension 2k)")
    p.add_argument("--out", default=None, help="output path (default construct-q<2k>.cubeorient)")

    p = sub.add_parser("counterexample", help="smooth, not strongly connected Q_3 orientation")
    p.add_argument("--out", default="q3-witness.cubeorient", help="witness output path")

    p = sub.add_parser("enumerate", help="count Eulerian orientations (d <= 4)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--cross-check", action="store_true", help="re-count under a second edge order")

    p = sub.add_parser("facts", help="isoperimetric inequality sweeps")
    p.add_argument("--k", type=int, required=True)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_verify(
                args.dim,
                args.mode,
                samples=args.samples,
                seed=args.seed,
                steps=args.steps,
                jobs=_resolve_jobs(args.jobs),
                out_dir=args.out,
            )
            _print_report(report)
        elif args.command == "harper":
            rows = harper_rows(args.dim, args.m_max)
            text = (
                _rows_to_csv(rows)
                if args.format == "csv"
                else json.dumps(rows, indent=2, sort_keys=True) + "\n"
            )
            if args.out:
                with open(args.out, "w", encoding="ascii") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        elif args.command == "construct":
            out_path = args.out or f"construct-q{2 * args.k}.cubeorient"
            report = run_construct(args.k, out_path)
            _print_report(report)
        elif args.command == "counterexample":
            report = run_counterexample(args.out)
            _print_report(report)
        elif args.command == "enumerate":
            report = run_enumerate(args.dim, cross_check=args.cross_check)
            _print_report(report)
        elif args.command == "facts":
            report = run_facts(args.k)
            _print_report(report)
        else:  # pragma: no cover - argparse enforces the choices
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0 if report.failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
