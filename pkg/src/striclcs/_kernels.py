"""Compiled inner loops. Inputs are int32 token-code arrays (0-based storage)."""
import numpy as np
from numba import njit

ABSENT = -1


@njit(cache=True)
def compact_ends(s, p):
    # ends[i] (1-based i) = last index of the greedy appearance of p starting at i.
    # Next-occurrence tables for p's distinct symbols, then one r-step walk per
    # start holding p[0]: O(|s| * |p|) in the worst case.
    n = s.size
    r = p.size
    ends = np.full(n + 1, ABSENT, dtype=np.int64)
    # distinct symbols of p; sym_of[k] is the table row for p[k]
    sym_of = np.empty(r, dtype=np.int64)
    code = np.empty(r, dtype=p.dtype)
    nsym = 0
    for k in range(r):
        sym_of[k] = -1
        for q in range(nsym):
            if code[q] == p[k]:
                sym_of[k] = q
                break
        if sym_of[k] < 0:
            code[nsym] = p[k]
            sym_of[k] = nsym
            nsym += 1
    # nxt[q, x] = smallest position >= x holding symbol q, for x in 1..n+1
    nxt = np.empty((nsym, n + 2), dtype=np.int64)
    for q in range(nsym):
        c = code[q]
        nxt[q, n + 1] = ABSENT
        for x in range(n, 0, -1):
            nxt[q, x] = x if s[x - 1] == c else nxt[q, x + 1]
    work = nsym * n
    count = 0
    for i in range(1, n + 1):
        if s[i - 1] != p[0]:
            continue
        x = i
        for k in range(1, r):
            work += 1
            x = nxt[sym_of[k], x + 1] if x < n else ABSENT
            if x == ABSENT:
                break
        if x == ABSENT:
            # later starts cannot complete either
            break
        ends[i] = x
        count += 1
    work += n
    return ends, work, count


# LCS rows are computed 64 cells per word (bit-vector LCS).  Bit j-1 of
# packed row i is clear exactly when F[i][j] = F[i][j-1] + 1, so
# F[i][j] = j - (set bits below j).  Rows carry one trailing zero word so
# that j = m needs no bounds test.  Helpers called per cell take scalars
# only: passing arrays into a jitted call costs a refcount round trip.

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_ALL = ~np.uint64(0)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_B8 = np.uint64(0x00FF00FF00FF00FF)
_B16 = np.uint64(0x0000FFFF0000FFFF)


@njit(inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(inline="always")
def _below(word, j):
    # set bits of ``word`` under bit position j mod 64
    return _popcount(word & ((_ONE << np.uint64(j & 63)) - _ONE))


@njit(inline="always")
def _reverse_bits(x):
    x = ((x >> _ONE) & _M1) | ((x & _M1) << _ONE)
    x = ((x >> np.uint64(2)) & _M2) | ((x & _M2) << np.uint64(2))
    x = ((x >> np.uint64(4)) & _M4) | ((x & _M4) << np.uint64(4))
    x = ((x >> np.uint64(8)) & _B8) | ((x & _B8) << np.uint64(8))
    x = ((x >> np.uint64(16)) & _B16) | ((x & _B16) << np.uint64(16))
    return (x >> np.uint64(32)) | (x << np.uint64(32))


@njit(cache=True)
def _symbol_masks(a, b):
    # masks[k] marks the positions of b's k-th symbol; look[i] is a[i]'s k or -1
    m = b.size
    w = (m + 63) >> 6
    top = 0
    for j in range(m):
        top = max(top, b[j])
    if top <= 4 * m + 256:
        # small code range: direct table instead of a sort
        slot = np.full(top + 1, -1, dtype=np.int64)
        nsym = 0
        for j in range(m):
            if slot[b[j]] < 0:
                slot[b[j]] = nsym
                nsym += 1
        masks = np.zeros((max(nsym, 1), w), dtype=np.uint64)
        for j in range(m):
            masks[slot[b[j]], j >> 6] |= _ONE << np.uint64(j & 63)
        look = np.full(a.size, -1, dtype=np.int64)
        for i in range(a.size):
            if a[i] <= top:
                look[i] = slot[a[i]]
        return masks, look
    sym = np.unique(b)
    masks = np.zeros((sym.size, w), dtype=np.uint64)
    for j in range(m):
        k = np.searchsorted(sym, b[j])
        masks[k, j >> 6] |= _ONE << np.uint64(j & 63)
    look = np.full(a.size, -1, dtype=np.int64)
    for i in range(a.size):
        k = np.searchsorted(sym, a[i])
        if k < sym.size and sym[k] == a[i]:
            look[i] = k
    return masks, look


@njit(inline="always")
def _step(row, masks, k, w):
    # advance one packed row in place; k < 0 means the symbol is absent from b
    if k < 0:
        return
    carry = _ZERO
    for t in range(w):
        v = row[t]
        u = v & masks[k, t]
        s = v + u
        s2 = s + carry
        carry = np.uint64(s < v) | np.uint64(s2 < s)
        row[t] = s2 | (v - u)


@njit(inline="always")
def _prefix(row, pre, w):
    acc = 0
    for t in range(w):
        acc += _popcount(row[t])
        pre[t + 1] = acc


@njit(inline="always")
def _packed_start(m):
    w = (m + 63) >> 6
    row = np.empty(w + 1, dtype=np.uint64)
    row[:w] = _ALL
    row[w] = _ZERO
    return row, w


@njit(cache=True)
def _fill_forward_into(a, b, f):
    # every cell is written, borders included, so f may come from np.empty
    n, m = a.size, b.size
    zero = f.dtype.type(0)
    f[0, :] = zero
    f[n + 1, :] = zero
    masks, look = _symbol_masks(a, b)
    row, w = _packed_start(m)
    for i in range(1, n + 1):
        _step(row, masks, look[i - 1], w)
        f[i, 0] = zero
        f[i, m + 1] = zero
        # expand: each clear bit adds one; unsigned indices skip the
        # negative-index wraparound test numba inserts otherwise
        acc = zero
        for t in range(w):
            word = ~row[t]
            base = 64 * t
            for q in range(min(64, m - base)):
                acc += f.dtype.type((word >> np.uint64(q)) & _ONE)
                f[np.uintp(i), np.uintp(base + q + 1)] = acc
    return f


@njit(cache=True)
def _fill_reverse_into(a, b, g):
    # forward rows of the reversed inputs, written mirrored
    n, m = a.size, b.size
    zero = g.dtype.type(0)
    g[0, :] = zero
    g[n + 1, :] = zero
    masks, look = _symbol_masks(a[::-1].copy(), b[::-1].copy())
    row, w = _packed_start(m)
    for x in range(1, n + 1):
        _step(row, masks, look[x - 1], w)
        i = n + 1 - x
        g[i, 0] = zero
        g[i, m + 1] = zero
        # column j holds the clear bits at reversed positions 0..m-j; start from
        # the row total and walk the bits downwards so writes go left to right
        ones = 0
        for t in range(w - 1):
            ones += _popcount(row[t])
        ones += _below(row[w - 1], m) if m & 63 else _popcount(row[w - 1])
        acc = g.dtype.type(m - ones)
        for tt in range(w):
            t = w - 1 - tt
            base = 64 * t
            top = min(64, m - base)
            # bit-reverse the live part so the walk reads low bits first
            word = _reverse_bits(~row[t] << np.uint64(64 - top))
            col = m - base - top + 1
            for q in range(top):
                g[np.uintp(i), np.uintp(col + q)] = acc
                acc -= g.dtype.type((word >> np.uint64(q)) & _ONE)
    return g


@njit(cache=True)
def fill_forward(a, b):
    """F over (n+2) x (m+2); row n+1 and column m+1 stay zero."""
    return _fill_forward_into(a, b, np.empty((a.size + 2, b.size + 2), dtype=np.int32))


@njit(cache=True)
def fill_reverse(a, b):
    """R over (n+2) x (m+2): the forward table of the reversed inputs, mirrored."""
    return _fill_reverse_into(a, b, np.empty((a.size + 2, b.size + 2), dtype=np.int32))


@njit(cache=True)
def best_anchor(f, g, a, b, ends_a, ends_b, p1, r):
    # first maximum in row-major order of F[i][j] + R[end_a(i)][end_b(j)] + r - 2
    cols = np.empty(b.size, dtype=np.int64)
    nc = 0
    for j in range(1, b.size + 1):
        if b[j - 1] == p1 and ends_b[j] != ABSENT:
            cols[nc] = j
            nc += 1
    best = -1
    bi = 0
    bj = 0
    for i in range(1, a.size + 1):
        qa = ends_a[i]
        if a[i - 1] != p1 or qa == ABSENT:
            continue
        for c in range(nc):
            j = cols[c]
            val = f[i, j] + g[qa, ends_b[j]] + r - 2
            if val > best:
                best = val
                bi = i
                bj = j
    return best, bi, bj


@njit(cache=True)
def cubic_str_ic(a, b, p):
    # h[j, k]: longest common subsequence of the current prefixes whose last
    # k symbols spell p[0:k]; g[j]: longest one containing p anywhere.
    n, m, r = a.size, b.size, p.size
    neg = -(1 << 30)
    lcs_prev = np.zeros(m + 1, dtype=np.int64)
    lcs_cur = np.zeros(m + 1, dtype=np.int64)
    h_prev = np.full((m + 1, r + 1), neg, dtype=np.int64)
    h_cur = np.full((m + 1, r + 1), neg, dtype=np.int64)
    g_prev = np.full(m + 1, neg, dtype=np.int64)
    g_cur = np.full(m + 1, neg, dtype=np.int64)
    for i in range(1, n + 1):
        ai = a[i - 1]
        lcs_cur[0] = 0
        g_cur[0] = neg
        for k in range(r + 1):
            h_cur[0, k] = neg
        for j in range(1, m + 1):
            match = ai == b[j - 1]
            if match:
                lcs_cur[j] = lcs_prev[j - 1] + 1
            else:
                lcs_cur[j] = max(lcs_prev[j], lcs_cur[j - 1])
            for k in range(1, r + 1):
                v = max(h_prev[j, k], h_cur[j - 1, k])
                if match and ai == p[k - 1]:
                    base = lcs_prev[j - 1] if k == 1 else h_prev[j - 1, k - 1]
                    if base >= 0 and base + 1 > v:
                        v = base + 1
                h_cur[j, k] = v
            v = max(g_prev[j], g_cur[j - 1], h_cur[j, r])
            if match and g_prev[j - 1] >= 0 and g_prev[j - 1] + 1 > v:
                v = g_prev[j - 1] + 1
            g_cur[j] = v
        lcs_prev, lcs_cur = lcs_cur, lcs_prev
        h_prev, h_cur = h_cur, h_prev
        g_prev, g_cur = g_cur, g_prev
    return g_prev[m] if g_prev[m] >= 0 else -1


@njit(cache=True)
def _strides(dims):
    z = dims.size
    st = np.empty(z, dtype=np.int64)
    st[z - 1] = 1
    for k in range(z - 2, -1, -1):
        st[k] = st[k + 1] * dims[k + 1]
    return st


@njit(cache=True)
def fill_multi(seqs, lens, forward):
    # Flat mixed-radix tensor over coordinates 0..n_k+1 per axis.
    z = lens.size
    dims = lens + 2
    st = _strides(dims)
    size = 1
    for k in range(z):
        size *= dims[k]
    diag = 0
    for k in range(z):
        diag += st[k]
    t = np.zeros(size, dtype=np.int32)
    coord = np.empty(z, dtype=np.int64)
    for step in range(size):
        idx = step if forward else size - 1 - step
        rem = idx
        border = False
        for k in range(z):
            c = rem // st[k]
            rem -= c * st[k]
            coord[k] = c
            if c == 0 or c == dims[k] - 1:
                border = True
        if border:
            continue
        tok = seqs[0, coord[0] - 1]
        same = True
        for k in range(1, z):
            if seqs[k, coord[k] - 1] != tok:
                same = False
                break
        if same:
            t[idx] = t[idx - diag] + 1 if forward else t[idx + diag] + 1
        else:
            best = 0
            for k in range(z):
                v = t[idx - st[k]] if forward else t[idx + st[k]]
                if v > best:
                    best = v
            t[idx] = best
    return t


@njit(cache=True)
def trace_forward(f, a, b, i, j):
    # diagonal at matches, otherwise up on ties; returns 1-based (i, j) rows
    out = np.empty((min(i, j), 2), dtype=np.int64)
    k = 0
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            out[k, 0] = i
            out[k, 1] = j
            k += 1
            i -= 1
            j -= 1
        elif f[i - 1, j] >= f[i, j - 1]:
            i -= 1
        else:
            j -= 1
    return out[:k][::-1]


@njit(cache=True)
def trace_reverse(g, a, b, i, j):
    n, m = a.size, b.size
    out = np.empty((min(n - i + 1, m - j + 1), 2), dtype=np.int64)
    k = 0
    while i <= n and j <= m:
        if a[i - 1] == b[j - 1]:
            out[k, 0] = i
            out[k, 1] = j
            k += 1
            i += 1
            j += 1
        elif g[i + 1, j] >= g[i, j + 1]:
            i += 1
        else:
            j += 1
    return out[:k]


@njit(cache=True)
def _greedy(s, p, start, out, col):
    # 1-based positions of the compact appearance of p in s from start
    x = start
    out[0, col] = x
    for k in range(1, p.size):
        while s[x] != p[k]:
            x += 1
        x += 1
        out[k, col] = x


@njit(cache=True)
def solve_codes(a, b, p, f, g):
    """Length, anchor and witness trace for a non-empty constraint; length -1 if none.

    ``f`` and ``g`` are (n+2) x (m+2) scratch tables, overwritten.
    """
    r = p.size
    ends_a, _, ca = compact_ends(a, p)
    ends_b, _, cb = compact_ends(b, p)
    if ca == 0 or cb == 0:
        return -1, 0, 0, np.empty((0, 2), dtype=np.int64)
    _fill_forward_into(a, b, f)
    _fill_reverse_into(a, b, g)
    best, i, j = best_anchor(f, g, a, b, ends_a, ends_b, p[0], r)
    if best < 0:
        return -1, 0, 0, np.empty((0, 2), dtype=np.int64)
    mid = np.empty((r, 2), dtype=np.int64)
    _greedy(a, p, i, mid, 0)
    _greedy(b, p, j, mid, 1)
    head = trace_forward(f, a, b, i, j)
    tail = trace_reverse(g, a, b, mid[r - 1, 0], mid[r - 1, 1])
    h, t = head.shape[0] - 1, tail.shape[0] - 1
    trace = np.empty((h + r + t, 2), dtype=np.int64)
    trace[:h] = head[:h]
    trace[h:h + r] = mid
    trace[h + r:] = tail[1:]
    return best, i, j, trace


@njit(cache=True)
def lcs_trace(a, b):
    return trace_forward(fill_forward(a, b), a, b, a.size, b.size)


@njit(cache=True)
def bit_llcs(a, b):
    # LLCS(a, b) in O(m) words: clear bits of the last packed row
    w = (b.size + 63) >> 6
    masks, look = _symbol_masks(a, b)
    row = np.empty(w + 1, dtype=np.uint64)
    row[:w] = _ALL
    row[w] = _ZERO
    for i in range(a.size):
        _step(row, masks, look[i], w)
    m = b.size
    ones = _below(row[m >> 6], m)
    for t in range(m >> 6):
        ones += _popcount(row[t])
    return m - ones


@njit(cache=True)
def length_only(a, b, ends_a, ends_b, r):
    # Row-by-row sweeps; only F at anchor candidates and R at appearance
    # endpoints are retained.
    n, m = a.size, b.size
    row_slot = np.full(n + 2, -1, dtype=np.int64)
    col_slot = np.full(m + 2, -1, dtype=np.int64)
    end_row_slot = np.full(n + 2, -1, dtype=np.int64)
    end_col_slot = np.full(m + 2, -1, dtype=np.int64)
    nr = 0
    for i in range(1, n + 1):
        if ends_a[i] != ABSENT:
            row_slot[i] = nr
            nr += 1
            end_row_slot[ends_a[i]] = 0
    nc = 0
    for j in range(1, m + 1):
        if ends_b[j] != ABSENT:
            col_slot[j] = nc
            nc += 1
            end_col_slot[ends_b[j]] = 0
    if nr == 0 or nc == 0:
        return -1
    cols = np.empty(nc, dtype=np.int64)
    for j in range(1, m + 1):
        if col_slot[j] >= 0:
            cols[col_slot[j]] = j
    ner = 0
    for i in range(1, n + 1):
        if end_row_slot[i] >= 0:
            end_row_slot[i] = ner
            ner += 1
    nec = 0
    for j in range(1, m + 1):
        if end_col_slot[j] >= 0:
            end_col_slot[j] = nec
            nec += 1
    end_cols = np.empty(nec, dtype=np.int64)
    for j in range(1, m + 1):
        if end_col_slot[j] >= 0:
            end_cols[end_col_slot[j]] = j

    # packed row sweeps; only one row is alive at a time
    w = (m + 63) >> 6
    fvals = np.empty((nr, nc), dtype=np.int32)
    masks, look = _symbol_masks(a, b)
    row = np.empty(w + 1, dtype=np.uint64)
    pre = np.zeros(w + 1, dtype=np.int64)
    row[:w] = _ALL
    row[w] = _ZERO
    for i in range(1, n + 1):
        _step(row, masks, look[i - 1], w)
        if row_slot[i] >= 0:
            _prefix(row, pre, w)
            for c in range(nc):
                j = cols[c]
                fvals[row_slot[i], c] = j - pre[j >> 6] - _below(row[j >> 6], j)

    # reverse table from the reversed inputs: R[i][j] = Frev[n+1-i][m+1-j]
    rvals = np.empty((ner, nec), dtype=np.int32)
    masks, look = _symbol_masks(a[::-1].copy(), b[::-1].copy())
    row[:w] = _ALL
    for x in range(1, n + 1):
        _step(row, masks, look[x - 1], w)
        i = n + 1 - x
        if end_row_slot[i] >= 0:
            _prefix(row, pre, w)
            for c in range(nec):
                e = m + 1 - end_cols[c]
                rvals[end_row_slot[i], c] = e - pre[e >> 6] - _below(row[e >> 6], e)

    best = -1
    for i in range(1, n + 1):
        if row_slot[i] < 0:
            continue
        er = end_row_slot[ends_a[i]]
        for c in range(nc):
            val = fvals[row_slot[i], c] + rvals[er, end_col_slot[ends_b[cols[c]]]] + r - 2
            if val > best:
                best = val
    return best
