"""Acceptance suite: one check per release criterion.

Each test prints a single PASS/FAIL line; the lines are repeated in the
"acceptance criteria" section of the pytest summary.
"""
import random
import statistics
import time
from functools import lru_cache
from itertools import combinations_with_replacement, product

import numpy as np

import conftest
from striclcs import (
    MultiInstance,
    build_table,
    cubic_str_ic_lcs,
    exhaustive_multi,
    exhaustive_str_ic_lcs,
    forward_matrix,
    is_subsequence,
    is_substring,
    multi_solve,
    reverse_matrix,
    solve,
    solve_length_only,
    solve_sparse,
)
from striclcs.bench import BenchSpec, random_instance, run_bench, timed

ALPHA = "abcdefghijklmnopqrstuvwxyz"


def report(label: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {label}: {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def words(alphabet: str, max_len: int) -> list[str]:
    return ["".join(w) for k in range(max_len + 1) for w in product(alphabet, repeat=k)]


def witness_ok(res, a, b, p) -> bool:
    seq = res.sequence
    return (seq is not None and len(seq) == res.length and is_subsequence(seq, a)
            and is_subsequence(seq, b) and is_substring(p, seq))


class Tally:
    def __init__(self):
        self.instances = 0
        self.solved = 0
        self.mismatches = []
        self.bad_witnesses = []

    def check(self, inst, expected, res):
        self.instances += 1
        if res.length != expected:
            self.mismatches.append((inst, expected, res.length))
        if res.length is not None:
            self.solved += 1
            if not witness_ok(res, *inst):
                self.bad_witnesses.append(inst)


def random_constraint(rng, a, alpha, r):
    # half the time take a slice of A so that solutions are common
    if r and a and rng.random() < 0.5:
        k = rng.randrange(len(a))
        return a[k:k + r]
    return "".join(rng.choice(alpha) for _ in range(r))


@lru_cache(maxsize=None)
def small_oracle_run() -> tuple[Tally, Tally]:
    full = Tally()
    ws = words("ab", 7)
    for p in words("ab", 3):
        for a in ws:
            for b in ws:
                full.check((a, b, p), exhaustive_str_ic_lcs(a, b, p), solve(a, b, p))
    rnd = Tally()
    rng = random.Random(1)
    for _ in range(100_000):
        alpha = ALPHA[:rng.randint(1, 4)]
        a = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 12)))
        p = random_constraint(rng, a, alpha, rng.randint(0, 4))
        rnd.check((a, b, p), exhaustive_str_ic_lcs(a, b, p), solve(a, b, p))
    return full, rnd


@lru_cache(maxsize=None)
def medium_agreement_run() -> tuple[Tally, list]:
    tally = Tally()
    disagreements = []
    rng = random.Random(2)
    for k in range(1000):
        alpha = ALPHA[:(2, 4, 26)[k % 3]]
        a = "".join(rng.choice(alpha) for _ in range(300))
        b = "".join(rng.choice(alpha) for _ in range(300))
        p = random_constraint(rng, a, alpha, rng.randint(1, 20))
        res = solve(a, b, p)
        sparse = solve_sparse(a, b, p).length
        cubic = cubic_str_ic_lcs(a, b, p)
        if not res.length == sparse == cubic:
            disagreements.append(((a, b, p), res.length, sparse, cubic))
        tally.check((a, b, p), cubic, res)
    return tally, disagreements


def test_criterion_1_oracle_optimality():
    t0 = time.perf_counter()
    full, rnd = small_oracle_run()
    elapsed = time.perf_counter() - t0
    ok = not full.mismatches and not rnd.mismatches and elapsed <= 300
    report("criterion 1 (oracle optimality)", ok,
           f"{full.instances} exhaustive + {rnd.instances} random instances, "
           f"{len(full.mismatches) + len(rnd.mismatches)} mismatches, {elapsed:.0f}s")
    assert not full.mismatches, full.mismatches[:5]
    assert not rnd.mismatches, rnd.mismatches[:5]
    assert elapsed <= 300


def test_criterion_2_triple_agreement():
    t0 = time.perf_counter()
    tally, disagreements = medium_agreement_run()
    elapsed = time.perf_counter() - t0
    ok = not disagreements and elapsed <= 120
    report("criterion 2 (quadratic/sparse/cubic agreement)", ok,
           f"{tally.instances} instances at n=m=300, {tally.solved} solvable, "
           f"{len(disagreements)} disagreements, {elapsed:.0f}s")
    assert not disagreements, disagreements[:1]
    assert elapsed <= 120


def test_criterion_3_witness_validity():
    tallies = [*small_oracle_run(), medium_agreement_run()[0]]
    solved = sum(t.solved for t in tallies)
    bad = [inst for t in tallies for inst in t.bad_witnesses]
    report("criterion 3 (witness validity)", not bad,
           f"{solved} witnesses checked, {len(bad)} invalid")
    assert not bad, bad[:5]


def test_criterion_4_length_only_equivalence():
    rng = random.Random(4)
    bad = []
    for _ in range(10_000):
        alpha = ALPHA[:rng.choice((2, 4, 26))]
        a = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 200)))
        b = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 200)))
        p = random_constraint(rng, a, alpha, rng.randint(0, 10))
        full, lean = solve(a, b, p).length, solve_length_only(a, b, p)
        if full != lean:
            bad.append((a, b, p, full, lean))
    report("criterion 4 (length-only equivalence)", not bad,
           f"10000 instances, {len(bad)} mismatches")
    assert not bad, bad[:1]


def median_ns(fn, insts) -> float:
    return statistics.median(timed(fn, inst)[1] for inst in insts)


def test_criterion_5_empirical_complexity():
    bench = run_bench(BenchSpec([250, 500, 1000, 2000], r=20, sigma=4, reps=5, seed=5,
                                algorithms=["quadratic"]))
    exponent = bench["exponent"]["quadratic"]
    medians = "/".join(f"{t / 1e3:.0f}" for t in bench["median_ns"]["quadratic"])

    rng = random.Random(55)
    insts = [random_instance(rng, 2000, 2000, 50, 4) for _ in range(5)]
    quad = median_ns(lambda a, b, p: solve(a, b, p).length, insts)
    cubic = median_ns(cubic_str_ic_lcs, insts)
    ratio = cubic / quad

    fit_ok = 1.6 <= exponent <= 2.4
    ratio_ok = ratio >= 5
    report("criterion 5 (empirical complexity)", fit_ok and ratio_ok,
           f"quadratic exponent {exponent:.2f} (need 1.6..2.4; medians {medians} us), "
           f"cubic/quadratic at n=m=2000 r=50 = {ratio:.2f} (need >= 5; "
           f"{cubic / 1e6:.0f} ms vs {quad / 1e6:.0f} ms)")
    assert fit_ok, exponent
    assert ratio_ok, ratio


def test_criterion_6_multi_sequence():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    ws = words("ab", 5)
    ps = words("ab", 3)
    # lengths depend only on the multiset of mains, so unordered triples cover every case
    for mains in combinations_with_replacement(ws, 3):
        for p in ps:
            res = multi_solve(MultiInstance(mains, p))
            expected = exhaustive_multi(mains, p)
            checked += 1
            if res.length != expected:
                bad.append((mains, p, expected, res.length))
            elif res.length is not None and not (
                    len(res.sequence) == res.length and is_substring(p, res.sequence)
                    and all(is_subsequence(res.sequence, s) for s in mains)):
                bad.append((mains, p, "witness", res.sequence))

    rng = random.Random(6)
    pairs = 0
    for _ in range(1000):
        alpha = ALPHA[:rng.randint(2, 4)]
        a = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 30)))
        b = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 30)))
        p = random_constraint(rng, a, alpha, rng.randint(0, 5))
        pairs += 1
        got, want = multi_solve(MultiInstance((a, b), p)).length, solve(a, b, p).length
        if got != want:
            bad.append(((a, b), p, want, got))
    elapsed = time.perf_counter() - t0
    report("criterion 6 (multi-sequence)", not bad,
           f"{checked} z=3 instances vs exhaustive, {pairs} z=2 instances vs solve, "
           f"{len(bad)} failures, {elapsed:.0f}s")
    assert not bad, bad[:5]


def dp_violations(a: str, b: str, alpha_tok: str) -> list[str]:
    n, m = len(a), len(b)
    f = forward_matrix(a, b).cells[:n + 1, :m + 1].astype(np.int64)
    g = reverse_matrix(a, b).cells[1:n + 2, 1:m + 2].astype(np.int64)
    out = []
    for name, mat in (("F", f), ("R", g[::-1, ::-1])):
        dr, dc = np.diff(mat, axis=0), np.diff(mat, axis=1)
        if (dr < 0).any() or (dc < 0).any():
            out.append(f"{name} not monotone")
        if (dr > 1).any() or (dc > 1).any():
            out.append(f"{name} step > 1")
    flipped = forward_matrix(a[::-1], b[::-1]).cells[:n + 1, :m + 1]
    if not np.array_equal(g[::-1, ::-1], flipped):
        out.append("F/R duality")
    longer = forward_matrix(a, alpha_tok + b).cells[:n + 1, 1:m + 2]
    if (longer < f).any():
        out.append("prepend monotonicity")
    return out


def test_criterion_7_dp_invariants():
    rng = random.Random(7)
    bad = []
    for _ in range(10_000):
        alpha = ALPHA[:rng.choice((1, 2, 4, 26))]
        a = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 40)))
        b = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 40)))
        v = dp_violations(a, b, rng.choice(alpha))
        if v:
            bad.append((a, b, v))
    report("criterion 7 (DP invariants)", not bad, f"10000 instances, {len(bad)} violations")
    assert not bad, bad[:1]


def plain_subsequence(x, y) -> bool:
    k = 0
    for tok in y:
        if k < len(x) and x[k] == tok:
            k += 1
    return k == len(x)


def test_criterion_8_preprocessing_minimality():
    rng = random.Random(8)
    bad = []
    entries = 0
    for _ in range(10_000):
        alpha = ALPHA[:rng.choice((2, 3, 4, 26))]
        s = "".join(rng.choice(alpha) for _ in range(rng.randint(0, 50)))
        p = "".join(rng.choice(alpha) for _ in range(rng.randint(1, 6)))
        table = build_table(s, p)
        for i in range(1, len(s) + 1):
            q = table[i]
            if q is None:
                # absent only when no appearance starts at i
                if s[i - 1] == p[0] and plain_subsequence(p, s[i - 1:]):
                    bad.append((s, p, i, None))
                continue
            entries += 1
            if not (s[i - 1] == p[0] and plain_subsequence(p, s[i - 1:q])
                    and not plain_subsequence(p, s[i - 1:q - 1])):
                bad.append((s, p, i, q))
    report("criterion 8 (preprocessing minimality)", not bad,
           f"10000 pairs, {entries} defined entries, {len(bad)} failures")
    assert not bad, bad[:5]
