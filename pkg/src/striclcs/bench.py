"""Quadratic-vs-cubic timing harness with cross-algorithm agreement checks."""
from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from .oracle import cubic_str_ic_lcs
from .solver import solve, solve_length_only
from .sparse import solve_sparse

LengthFn = Callable[[bytes, bytes, bytes], Optional[int]]

ALGORITHMS: dict[str, LengthFn] = {
    "quadratic": lambda a, b, p: solve(a, b, p).length,
    "length-only": solve_length_only,
    "sparse": lambda a, b, p: solve_sparse(a, b, p).length,
    "cubic": cubic_str_ic_lcs,
}

ALPHABET = b"abcdefghijklmnopqrstuvwxyz"


@dataclass
class Disagreement(Exception):
    instance: tuple[bytes, bytes, bytes]
    lengths: dict[str, Optional[int]]

    def __str__(self) -> str:
        a, b, p = self.instance
        return f"algorithms disagree on A={a!r} B={b!r} P={p!r}: {self.lengths}"


@dataclass
class BenchSpec:
    sizes: list[int]
    r: int = 20
    sigma: int = 4
    reps: int = 5
    seed: int = 0
    algorithms: list[str] = field(default_factory=lambda: ["quadratic", "cubic"])

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("empty size grid")
        if any(n < 1 for n in self.sizes) or self.reps < 1 or self.r < 1:
            raise ValueError("sizes, reps and r must be positive")
        if not 1 <= self.sigma <= len(ALPHABET):
            raise ValueError(f"sigma must be in 1..{len(ALPHABET)}")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown or len(self.algorithms) < 1:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")


def random_instance(rng: random.Random, n: int, m: int, r: int, sigma: int) -> tuple[bytes, bytes, bytes]:
    alpha = ALPHABET[:sigma]
    draw = lambda k: bytes(rng.choice(alpha) for _ in range(k))  # noqa: E731
    return draw(n), draw(m), draw(r)


def parse_grid(spec: str) -> list[int]:
    return [int(tok) for tok in spec.replace(" ", "").split(",") if tok]


def _lengths(inst, algorithms: Mapping[str, LengthFn]) -> dict[str, Optional[int]]:
    return {name: fn(*inst) for name, fn in algorithms.items()}


def minimize(inst: tuple[bytes, bytes, bytes], algorithms: Mapping[str, LengthFn]) -> tuple[bytes, bytes, bytes]:
    """Greedily delete tokens while the algorithms still disagree."""
    def disagrees(x) -> bool:
        return len(set(_lengths(x, algorithms).values())) > 1

    cur = list(inst)
    changed = True
    while changed:
        changed = False
        for slot in range(3):
            k = 0
            while k < len(cur[slot]):
                seq = cur[slot]
                trial = list(cur)
                trial[slot] = seq[:k] + seq[k + 1:]
                if (slot < 2 or trial[2]) and disagrees(tuple(trial)):
                    cur = trial
                    changed = True
                else:
                    k += 1
    return tuple(cur)


def growth_exponent(sizes: Sequence[int], times: Sequence[float]) -> float:
    """Slope of log(time) against log(size)."""
    slope, _ = np.polyfit(np.log(sizes), np.log(times), 1)
    return float(slope)


def timed(fn: LengthFn, inst) -> tuple[Optional[int], int]:
    """Result and wall time in ns; the garbage collector is paused, as timeit does."""
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        out = fn(*inst)
        return out, time.perf_counter_ns() - t0
    finally:
        if enabled:
            gc.enable()


def _warm_up(spec: "BenchSpec", algorithms: Mapping[str, LengthFn], rounds: int = 3) -> None:
    # untimed runs at the smallest size; a separate RNG keeps the timed instances fixed
    rng = random.Random(-1 - spec.seed)
    n = min(spec.sizes)
    for _ in range(rounds):
        inst = random_instance(rng, n, n, spec.r, spec.sigma)
        for fn in algorithms.values():
            fn(*inst)


def run_bench(spec: BenchSpec, algorithms: Optional[Mapping[str, LengthFn]] = None) -> dict:
    """Time every algorithm on ``reps`` seeded instances per size.

    Raises :class:`Disagreement` (with a minimized instance) as soon as two
    algorithms report different lengths.
    """
    algos = algorithms or {name: ALGORITHMS[name] for name in spec.algorithms}
    _warm_up(spec, algos)
    rng = random.Random(spec.seed)
    medians: dict[str, list[int]] = {name: [] for name in algos}
    instances = 0
    for n in spec.sizes:
        samples: dict[str, list[int]] = {name: [] for name in algos}
        for _ in range(spec.reps):
            inst = random_instance(rng, n, n, spec.r, spec.sigma)
            lengths = {}
            for name, fn in algos.items():
                lengths[name], ns = timed(fn, inst)
                samples[name].append(ns)
            instances += 1
            if len(set(lengths.values())) > 1:
                small = minimize(inst, algos)
                raise Disagreement(small, _lengths(small, algos))
        for name in algos:
            medians[name].append(int(statistics.median(samples[name])))
    report = {
        "sizes": list(spec.sizes),
        "r": spec.r,
        "sigma": spec.sigma,
        "reps": spec.reps,
        "seed": spec.seed,
        "algorithms": list(algos),
        "median_ns": medians,
        "instances": instances,
        "disagreements": 0,
    }
    if len(spec.sizes) >= 2:
        report["exponent"] = {name: growth_exponent(spec.sizes, t) for name, t in medians.items()}
    return report
