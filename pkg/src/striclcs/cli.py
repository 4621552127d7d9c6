"""Command-line front end.

Exit status: 0 solved, 1 no solution, 2 invalid input or configuration,
3 benchmark disagreement.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .bench import BenchSpec, Disagreement, parse_grid, run_bench
from .multi import MultiInstance, multi_solve
from .oracle import EXHAUSTIVE_LIMIT, cubic_str_ic_lcs, exhaustive_str_ic_lcs
from .solver import solve, solve_length_only
from .sparse import solve_sparse

ALGORITHMS = ("quadratic", "sparse", "cubic", "exhaustive", "multi")
MULTI_MAX_Z = 4
MULTI_MAX_LEN = 64


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    inputs: list[str] = field(default_factory=list)
    constraint: Optional[bytes] = None
    constraint_path: Optional[str] = None
    algorithm: Optional[str] = None
    length_only: bool = False
    json: bool = False
    bench: Optional[BenchSpec] = None


def read_sequence(path: str) -> bytes:
    """Raw bytes with one trailing newline removed; FASTA headers are skipped."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if data.startswith(b">") or b"\n>" in data:
        lines = data.splitlines()
        return b"".join(line.rstrip(b"\r") for line in lines if not line.startswith(b">"))
    if data.endswith(b"\r\n"):
        return data[:-2]
    if data.endswith(b"\n"):
        return data[:-1]
    return data


def _resolve(config: RunConfig) -> tuple[list[bytes], bytes, str]:
    if (config.constraint is None) == (config.constraint_path is None):
        raise InputError("give exactly one of --constraint / --constraint-file")
    if len(config.inputs) < 2:
        raise InputError("need at least two main-sequence files")
    mains = [read_sequence(p) for p in config.inputs]
    p = config.constraint if config.constraint is not None else read_sequence(config.constraint_path)
    algo = config.algorithm or ("multi" if len(mains) > 2 else "quadratic")
    if algo not in ALGORITHMS:
        raise InputError(f"unknown algorithm {algo!r}")
    if (algo == "multi") != (len(mains) > 2):
        raise InputError("--algorithm multi is for three or more main sequences")
    if any(len(s) == 0 for s in mains) and not (config.length_only and len(p) == 0):
        raise InputError("main sequences must be non-empty")
    if algo in ("sparse", "cubic") and len(p) == 0:
        raise InputError(f"{algo} needs a non-empty constraint")
    if algo == "exhaustive" and max(map(len, mains)) > EXHAUSTIVE_LIMIT:
        raise InputError(f"exhaustive search is limited to length {EXHAUSTIVE_LIMIT}")
    if algo == "multi" and (len(mains) > MULTI_MAX_Z or max(map(len, mains)) > MULTI_MAX_LEN):
        raise InputError(f"multi is limited to {MULTI_MAX_Z} sequences of length {MULTI_MAX_LEN}")
    return mains, p, algo


def _compute(mains: list[bytes], p: bytes, algo: str, length_only: bool):
    """Returns (length, witness or None, anchor or None)."""
    if algo == "multi":
        res = multi_solve(MultiInstance(mains, p))
        return res.length, res.sequence, res.anchor
    a, b = mains
    if algo == "cubic":
        return cubic_str_ic_lcs(a, b, p), None, None
    if algo == "exhaustive":
        return exhaustive_str_ic_lcs(a, b, p), None, None
    if algo == "sparse":
        res = solve_sparse(a, b, p, witness=not length_only)
        return res.length, res.sequence, res.anchor
    if length_only:
        return solve_length_only(a, b, p), None, None
    res = solve(a, b, p)
    return res.length, res.sequence, res.anchor


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout.buffer
    err = err or sys.stderr
    try:
        mains, p, algo = _resolve(config)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    t0 = time.perf_counter_ns()
    length, witness, anchor = _compute(mains, p, algo, config.length_only)
    elapsed = time.perf_counter_ns() - t0
    if config.length_only:
        witness = None
    if config.json:
        doc = {"length": length, "algorithm": algo, "timings": {"total_ns": elapsed}}
        if witness is not None:
            doc["sequence"] = witness.decode("latin-1")
        if anchor is not None:
            doc["anchor"] = list(anchor)
        out.write((json.dumps(doc) + "\n").encode())
    elif length is not None:
        out.write(f"{length}\n".encode())
        if witness is not None:
            out.write(witness + b"\n")
    out.flush()
    if length is None:
        print("no solution", file=err)
        return 1
    return 0


def bench(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout.buffer
    err = err or sys.stderr
    try:
        report = run_bench(config.bench)
    except Disagreement as exc:
        a, b, p = exc.instance
        print(f"error: {exc}", file=err)
        print(json.dumps({"A": a.decode("latin-1"), "B": b.decode("latin-1"),
                          "P": p.decode("latin-1"), "lengths": exc.lengths}), file=err)
        return 3
    out.write((json.dumps(report, indent=2) + "\n").encode())
    out.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="striclcs",
        description="Longest common subsequence containing a constraint as a substring.")
    ap.add_argument("inputs", nargs="*", metavar="FILE", help="main sequence files (2 or more)")
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--constraint", help="constraint given inline")
    src.add_argument("--constraint-file", help="file holding the constraint")
    ap.add_argument("--algorithm", choices=ALGORITHMS)
    ap.add_argument("--length-only", action="store_true", help="print only the length")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--bench", metavar="GRID", help="comma-separated sizes, e.g. 250,500,1000")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--reps", type=int, default=5, help="instances per size (bench)")
    ap.add_argument("--bench-r", type=int, default=20, help="constraint length (bench)")
    ap.add_argument("--sigma", type=int, default=4, help="alphabet size (bench)")
    ap.add_argument("--bench-algorithms", default="quadratic,cubic",
                    help="comma-separated subset of quadratic,length-only,sparse,cubic")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.bench is not None:
        try:
            spec = BenchSpec(parse_grid(args.bench), r=args.bench_r, sigma=args.sigma, reps=args.reps,
                             seed=args.seed, algorithms=args.bench_algorithms.split(","))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return bench(RunConfig(bench=spec))
    constraint = os.fsencode(args.constraint) if args.constraint is not None else None
    config = RunConfig(args.inputs, constraint, args.constraint_file, args.algorithm,
                       args.length_only, args.json)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
