"""Naive reference helpers used to derive expected values in the tests.

Everything here is deliberately slow and shares no code with the package.
"""
from itertools import combinations


def subsequences_by_positions(y):
    """Every subsequence of ``y``, one per subset of positions (with repeats)."""
    n = len(y)
    for size in range(n + 1):
        for pos in combinations(range(n), size):
            yield tuple(y[k] for k in pos)


def brute_is_subsequence(x, y):
    return tuple(x) in set(subsequences_by_positions(y))


def brute_is_substring(x, y):
    x, y = tuple(x), tuple(y)
    return any(y[o:o + len(x)] == x for o in range(len(y) - len(x) + 1))


def brute_matches(a, b, keep=None):
    return [(i, j)
            for i in range(1, len(a) + 1)
            for j in range(1, len(b) + 1)
            if a[i - 1] == b[j - 1] and (keep is None or a[i - 1] == keep)]


def brute_llcs(x, y):
    common = set(subsequences_by_positions(x)) & set(subsequences_by_positions(y))
    return max(len(c) for c in common)


def brute_compact_end(s, p, i):
    """Smallest last index over all appearances of p in s starting at i (1-based)."""
    r = len(p)
    best = None
    rest = range(i, len(s))  # 0-based positions after i
    if s[i - 1] != p[0]:
        return None
    for tail in combinations(rest, r - 1):
        idx = (i - 1,) + tail
        if tuple(s[k] for k in idx) == tuple(p):
            last = idx[-1] + 1
            if best is None or last < best:
                best = last
    return best


def brute_str_ic_lcs(mains, p):
    """Longest common subsequence of all ``mains`` containing ``p`` contiguously."""
    sets = [set(subsequences_by_positions(x)) for x in mains]
    common = set.intersection(*sets)
    ok = [c for c in common if brute_is_substring(p, c)]
    if not ok:
        return None, set()
    best = max(len(c) for c in ok)
    return best, {c for c in ok if len(c) == best}


def brute_optimal_forward_traces(a, b, i, j):
    """All optimal common subsequences of a[:i], b[:j] that use a[i-1] last."""
    best, out = -1, set()
    for c in set(subsequences_by_positions(a[:i - 1])) & set(subsequences_by_positions(b[:j - 1])):
        cand = c + (a[i - 1],)
        if len(cand) > best:
            best, out = len(cand), {cand}
        elif len(cand) == best:
            out.add(cand)
    return out
