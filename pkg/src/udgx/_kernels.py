"""Inner loops shared by the float and exact paths.

This file is loaded twice by ``_accel``: once with ``JIT = True`` (numba,
float64 arrays) and once with ``JIT = False`` (plain Python over numpy object
arrays holding Fractions).  Everything here must therefore stay inside the
numba-compatible subset and allocate with the input dtype.
"""
import numpy as np

try:
    JIT  # noqa: B018  (injected by the loader)
except NameError:
    JIT = True

if JIT:
    import numba

    def njit(f):
        return numba.njit(cache=True)(f)
else:
    def njit(f):
        return f


@njit
def passes(d2, r2, eps, strict):
    if strict:
        return d2 - r2 > eps
    return d2 - r2 >= -eps


@njit
def dist2(xs, ys, i, j):
    dx = xs[i] - xs[j]
    dy = ys[i] - ys[j]
    return dx * dx + dy * dy


@njit
def pmod(x, n):
    return ((x % n) + n) % n


# ---------------------------------------------------------------------------
# bounding-box tree for first-far queries


@njit
def box_tree(xs, ys):
    n = xs.shape[0]
    size = 1
    while size < n:
        size *= 2
    bx0 = np.empty(2 * size, xs.dtype)
    bx1 = np.empty(2 * size, xs.dtype)
    by0 = np.empty(2 * size, xs.dtype)
    by1 = np.empty(2 * size, xs.dtype)
    cnt = np.zeros(2 * size, np.int64)
    for t in range(n):
        v = size + t
        bx0[v] = xs[t]
        bx1[v] = xs[t]
        by0[v] = ys[t]
        by1[v] = ys[t]
        cnt[v] = 1
    for v in range(size - 1, 0, -1):
        l = 2 * v
        r = l + 1
        cnt[v] = cnt[l] + cnt[r]
        if cnt[l] == 0:
            continue
        bx0[v] = bx0[l]
        bx1[v] = bx1[l]
        by0[v] = by0[l]
        by1[v] = by1[l]
        if cnt[r] > 0:
            if bx0[r] < bx0[v]:
                bx0[v] = bx0[r]
            if bx1[r] > bx1[v]:
                bx1[v] = bx1[r]
            if by0[r] < by0[v]:
                by0[v] = by0[r]
            if by1[r] > by1[v]:
                by1[v] = by1[r]
    return bx0, bx1, by0, by1, cnt


@njit
def first_in_range(qx, qy, lo, hi, forward, bx0, bx1, by0, by1, cnt, r2, eps, strict):
    """First (or last, if not forward) index in [lo, hi] passing the threshold."""
    if lo > hi:
        return -1
    size = cnt.shape[0] // 2
    sv = np.empty(130, np.int64)
    sl = np.empty(130, np.int64)
    sr = np.empty(130, np.int64)
    sv[0] = 1
    sl[0] = 0
    sr[0] = size - 1
    top = 1
    while top > 0:
        top -= 1
        v = sv[top]
        nl = sl[top]
        nr = sr[top]
        if nr < lo or nl > hi or cnt[v] == 0:
            continue
        dx = qx - bx0[v]
        ex = bx1[v] - qx
        if ex > dx:
            dx = ex
        dy = qy - by0[v]
        ey = by1[v] - qy
        if ey > dy:
            dy = ey
        if not passes(dx * dx + dy * dy, r2, eps, strict):
            continue
        if v >= size:
            return v - size
        mid = (nl + nr) // 2
        if forward:
            sv[top] = 2 * v + 1
            sl[top] = mid + 1
            sr[top] = nr
            sv[top + 1] = 2 * v
            sl[top + 1] = nl
            sr[top + 1] = mid
        else:
            sv[top] = 2 * v
            sl[top] = nl
            sr[top] = mid
            sv[top + 1] = 2 * v + 1
            sl[top + 1] = mid + 1
            sr[top + 1] = nr
        top += 2
    return -1


PROBE = 16


@njit
def far_ccw(xs, ys, i, j, bx0, bx1, by0, by1, cnt, r2, eps, strict):
    n = xs.shape[0]
    # answers usually sit a few steps away; probe before descending the tree
    for step in range(min(PROBE, n)):
        t = (j + step) % n
        if passes(dist2(xs, ys, i, t), r2, eps, strict):
            return t
    t = first_in_range(xs[i], ys[i], j, n - 1, True, bx0, bx1, by0, by1, cnt, r2, eps, strict)
    if t < 0:
        t = first_in_range(xs[i], ys[i], 0, j - 1, True, bx0, bx1, by0, by1, cnt, r2, eps, strict)
    return t


@njit
def far_cw(xs, ys, i, j, bx0, bx1, by0, by1, cnt, r2, eps, strict):
    n = xs.shape[0]
    for step in range(min(PROBE, n)):
        t = (j - step) % n
        if passes(dist2(xs, ys, i, t), r2, eps, strict):
            return t
    t = first_in_range(xs[i], ys[i], 0, j, False, bx0, bx1, by0, by1, cnt, r2, eps, strict)
    if t < 0:
        t = first_in_range(xs[i], ys[i], j + 1, n - 1, False, bx0, bx1, by0, by1, cnt, r2, eps, strict)
    return t


@njit
def far_self(xs, ys, bx0, bx1, by0, by1, cnt, r2, eps, strict):
    n = xs.shape[0]
    a = np.empty(n, np.int64)
    b = np.empty(n, np.int64)
    for i in range(n):
        a[i] = far_ccw(xs, ys, i, i, bx0, bx1, by0, by1, cnt, r2, eps, strict)
        b[i] = far_cw(xs, ys, i, i, bx0, bx1, by0, by1, cnt, r2, eps, strict)
    return a, b


# ---------------------------------------------------------------------------
# sublist unions for the cover extension steps.  A sublist is (start, length)
# with 1 <= length <= n; length == n is the whole cycle.


@njit
def near_run(a, b, n):
    # length of the open run strictly between b and a going CCW from b
    return pmod(a - b - 1, n)


@njit
def extend_ccw(a, b, s, length, a2, n):
    """Union of P(b,a), a stored run (s, length) holding a, and P(end, a2)."""
    len1 = near_run(a, b, n)
    back = pmod(a - s, n)
    reach = length - 1 - back
    j2 = pmod(a + reach, n)
    len3 = near_run(a2, j2, n)
    lo = -len1
    if -back < lo:
        lo = -back
    hi = reach + len3
    total = hi - lo + 1
    if total >= n:
        return 0, n
    return pmod(a + lo, n), total


@njit
def extend_cw(a, b, s, length, b2, n):
    """Mirror of extend_ccw: run (s, length) holds b, b2 lies CW of its start."""
    len1 = near_run(a, b, n)
    back = pmod(b - s, n)
    fwd = length - 1 - back
    len3 = near_run(s, b2, n)
    lo = -back - len3
    hi = len1
    if fwd > hi:
        hi = fwd
    total = hi - lo + 1
    if total >= n:
        return 0, n
    return pmod(b + lo, n), total


# ---------------------------------------------------------------------------
# unweighted cover loop with farthest-enclosing queries


@njit
def farthest_tables(starts, lens, m, n):
    """Prefix/suffix tables answering farthest-enclosing queries over m runs.

    endmax[c]: largest unrolled end among runs starting at or before c (CCW).
    stmin[u]: smallest unrolled start among runs ending at or after u, with
    u = c + n for a point c (CW).  The *arg arrays name the run.
    """
    endmax = np.full(n, -1, np.int64)
    endarg = np.full(n, -1, np.int64)
    stmin = np.full(2 * n, 3 * n, np.int64)
    starg = np.full(2 * n, -1, np.int64)
    for e in range(m):
        s = starts[e]
        hi = s + lens[e] - 1
        if hi > endmax[s]:
            endmax[s] = hi
            endarg[s] = e
        if hi >= n:
            if hi - n > endmax[0]:
                endmax[0] = hi - n
                endarg[0] = e
            if s < stmin[hi]:
                stmin[hi] = s
                starg[hi] = e
            if s + n < stmin[2 * n - 1]:
                stmin[2 * n - 1] = s + n
                starg[2 * n - 1] = e
        elif s + n < stmin[hi + n]:
            stmin[hi + n] = s + n
            starg[hi + n] = e
    for c in range(1, n):
        if endmax[c - 1] > endmax[c]:
            endmax[c] = endmax[c - 1]
            endarg[c] = endarg[c - 1]
    for c in range(2 * n - 2, -1, -1):
        if stmin[c + 1] < stmin[c]:
            stmin[c] = stmin[c + 1]
            starg[c] = starg[c + 1]
    return endmax, endarg, stmin, starg


@njit
def greedy_cover(xs, ys, a0, b0, kmax, bx0, bx1, by0, by1, cnt, r2, eps):
    """Run up to ``kmax`` rounds of the farthest-extension cover loop.

    Returns (round, entry, parent, who): ``who[t, e]`` is the centre added by
    entry e of round t and ``parent[t, e]`` its source entry in round t - 1.
    ``round`` is -1 when no round produced the whole cycle.  The history
    arrays start small and double, so a loose ``kmax`` costs nothing.
    """
    n = xs.shape[0]
    m = 2 * n
    st = np.zeros(m, np.int64)
    ln = np.zeros(m, np.int64)
    nst = np.zeros(m, np.int64)
    nln = np.zeros(m, np.int64)
    cap = min(kmax, 8)
    par = np.full((cap, m), -1, np.int32)
    who = np.full((cap, m), -1, np.int32)
    for i in range(n):
        st[i] = pmod(b0[i] + 1, n)
        ln[i] = near_run(a0[i], b0[i], n)
        who[0, i] = i
    size = n
    for t in range(1, kmax):
        if t == cap:
            cap = min(kmax, 2 * cap)
            grown = np.full((cap, m), -1, np.int32)
            grown[:t] = par
            par = grown
            grown = np.full((cap, m), -1, np.int32)
            grown[:t] = who
            who = grown
        endmax, endarg, stmin, starg = farthest_tables(st, ln, size, n)
        cur = 0
        for i in range(n):
            a = a0[i]
            b = b0[i]
            if endmax[a] >= a:
                e = endarg[a]
                s = st[e]
                length = ln[e]
                j2 = pmod(s + length - 1, n)
                a2 = far_ccw(xs, ys, i, pmod(j2 + 1, n), bx0, bx1, by0, by1, cnt, r2, eps, True)
                ns, nl = extend_ccw(a, b, s, length, a2, n)
                nst[cur] = ns
                nln[cur] = nl
                par[t, cur] = e
                who[t, cur] = i
                cur += 1
                if nl >= n:
                    return t, cur - 1, par, who
            u = b + n
            if stmin[u] <= u:
                e = starg[u]
                s = st[e]
                length = ln[e]
                b2 = far_cw(xs, ys, i, pmod(s - 1, n), bx0, bx1, by0, by1, cnt, r2, eps, True)
                ns, nl = extend_cw(a, b, s, length, b2, n)
                nst[cur] = ns
                nln[cur] = nl
                par[t, cur] = e
                who[t, cur] = i
                cur += 1
                if nl >= n:
                    return t, cur - 1, par, who
        st, nst = nst, st
        ln, nln = nln, ln
        size = cur
    return -1, -1, par, who


# ---------------------------------------------------------------------------
# convex maximum-weight independent set


@njit
def pencil(xs, ys, a, b, q):
    vx = xs[b] - xs[a]
    vy = ys[b] - ys[a]
    ux = 2 * xs[q] - xs[a] - xs[b]
    uy = 2 * ys[q] - ys[a] - ys[b]
    return (ux * ux + uy * uy - vx * vx - vy * vy) / (4 * (vy * ux - vx * uy))


@njit
def suffix_pos(kb, lo, hi, thr):
    """First position in rows lo..hi-1 of ``kb`` whose key (column 0) is strictly above ``thr``."""
    if lo == hi or kb[lo, 0] > thr:
        return lo
    if not kb[hi - 1, 0] > thr:
        return hi
    lo += 1
    hi -= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if kb[mid, 0] > thr:
            hi = mid
        else:
            lo = mid + 1
    return lo


@njit
def orient(xs, ys, a, b, c):
    return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])


@njit
def _lift3(xs, ys, a, b, c):
    # det of rows (x, y, x^2 + y^2) for three points
    za = xs[a] * xs[a] + ys[a] * ys[a]
    zb = xs[b] * xs[b] + ys[b] * ys[b]
    zc = xs[c] * xs[c] + ys[c] * ys[c]
    return (xs[a] * (ys[b] * zc - zb * ys[c]) - ys[a] * (xs[b] * zc - zb * xs[c])
            + za * (xs[b] * ys[c] - ys[b] * xs[c]))


@njit
def beyond(xs, ys, a, b, c, d):
    """Is p_d strictly outside the circle through p_a, p_b, p_c?

    Exact cocircularity is broken by raising each lifted height x^2 + y^2 by
    an infinitesimal that shrinks with the point index.  The lifted
    determinant is linear in the heights, so the first nonzero cofactor in
    index order decides.
    """
    det = -_lift3(xs, ys, b, c, d) + _lift3(xs, ys, a, c, d) - _lift3(xs, ys, a, b, d) + _lift3(xs, ys, a, b, c)
    zero = det - det
    if det == zero:
        rows = np.array([a, b, c, d])
        for r in np.argsort(rows):
            # the other three rows, in their original order
            u0 = 1 if r == 0 else 0
            u1 = 2 if r <= 1 else 1
            u2 = 3 if r <= 2 else 2
            cof = orient(xs, ys, rows[u0], rows[u1], rows[u2])
            if r % 2 == 1:
                cof = -cof
            if cof != zero:
                det = cof
                break
    return (det > zero) != (orient(xs, ys, a, b, c) > zero)


@njit
def far_matrix(xs, ys, r2, eps, strict):
    n = xs.shape[0]
    far = np.zeros((n, n), np.bool_)
    for i in range(n):
        for j in range(i + 1, n):
            if passes(dist2(xs, ys, i, j), r2, eps, strict):
                far[i, j] = True
                far[j, i] = True
    return far


@njit
def pair_slot(i, j, n):
    return ((j - i) % n) * n + i


@njit
def suffix_at(xs, ys, kb, pts, lo, hi, i, j, k):
    """First row of pair (i, j) lying strictly outside the circle through p_i, p_j, p_k.

    Rows whose key equals the threshold are cocircular with the query and get
    settled one by one with ``beyond``.
    """
    thr = pencil(xs, ys, i, j, k)
    pos = suffix_pos(kb, lo, hi, thr)
    while pos > lo and kb[pos - 1, 0] == thr and beyond(xs, ys, i, j, k, pts[pos - 1]):
        pos -= 1
    return pos


@njit
def batch_suffix(kb, base, top, thr, pos, m):
    """suffix_pos for m independent queries, advanced in lockstep.

    One probe per query per sweep keeps many cache misses in flight instead
    of waiting on each search in turn.
    """
    hi = np.empty(m, np.int64)
    for t in range(m):
        pos[t] = base[t]
        hi[t] = top[t]
    busy = m
    while busy > 0:
        busy = 0
        for t in range(m):
            lo = pos[t]
            h = hi[t]
            if lo < h:
                mid = (lo + h) >> 1
                up = kb[mid, 0] > thr[t]
                hi[t] = mid if up else h
                pos[t] = lo if up else mid + 1
                busy += 1


@njit
def mwis_table(xs, ys, w, far, target, stop):
    """Fill the per-pair pencil arrays in order of arc length.

    Returns (off, cnt, kb, arg, pts, f0, hit); pair (i, j) owns rows
    off[p] .. off[p]+cnt[p]-1 of ``kb`` with p = pair_slot(i, j, n), which
    holds the pencil key and the suffix-max value side by side.  Slots run by
    arc length and then start, so neighbouring starts read neighbouring rows.
    ``pts`` names the point behind each row and ``arg`` the suffix argmax.
    Lookups for one (arc length, split) are answered together by batch_suffix.
    With ``stop`` set, filling ends (hit = True) as soon as some far set of
    weight >= target is seen, and the arrays are then incomplete.
    """
    n = xs.shape[0]
    cnt = np.zeros(n * n, np.int64)
    for i in range(n):
        for d in range(2, n):
            j = (i + d) % n
            if not far[i, j]:
                continue
            c = 0
            for s in range(1, d):
                l = (i + s) % n
                if far[l, i] and far[l, j]:
                    c += 1
                    if stop and w[i] + w[l] + w[j] >= target:
                        return (np.zeros(n * n + 1, np.int64), cnt, np.empty((0, 2), xs.dtype),
                                np.empty(0, np.int32), np.empty(0, np.int32), np.empty(n * n, w.dtype), True)
            cnt[d * n + i] = c
    off = np.zeros(n * n + 1, np.int64)
    for p in range(n * n):
        off[p + 1] = off[p] + cnt[p]
    total = off[n * n]
    kb = np.empty((total, 2), xs.dtype)
    arg = np.empty(total, np.int32)
    pts = np.empty(total, np.int32)
    zero = w[0] - w[0]
    f0 = np.empty(n * n, w.dtype)
    for p in range(n * n):
        f0[p] = zero
    if total == 0:
        return off, cnt, kb, arg, pts, f0, False
    # candidates gathered per start i; the split s runs outside i so both
    # lookups sweep neighbouring slots
    tk = np.empty((n, n), xs.dtype)
    tg = np.empty((n, n), w.dtype)
    tl = np.empty((n, n), np.int64)
    mc = np.zeros(n, np.int64)
    who = np.empty(n, np.int64)
    base = np.empty(2 * n, np.int64)
    top = np.empty(2 * n, np.int64)
    pos = np.empty(2 * n, np.int64)
    thr = np.empty(2 * n, xs.dtype)
    for d in range(2, n):
        for i in range(n):
            mc[i] = 0
        for s in range(1, d):
            q1 = s * n
            q2 = (d - s) * n
            c = 0
            for i in range(n):
                j = (i + d) % n
                l = (i + s) % n
                if not (far[i, j] and far[l, i] and far[l, j]):
                    continue
                who[c] = i
                lo = off[q1 + i]
                base[2 * c] = lo
                top[2 * c] = lo + cnt[q1 + i]
                thr[2 * c] = pencil(xs, ys, i, l, j)
                lo = off[q2 + l]
                base[2 * c + 1] = lo
                top[2 * c + 1] = lo + cnt[q2 + l]
                thr[2 * c + 1] = pencil(xs, ys, l, j, i)
                c += 1
            batch_suffix(kb, base, top, thr, pos, 2 * c)
            for t in range(c):
                i = who[t]
                j = (i + d) % n
                l = (i + s) % n
                g = w[l]
                p = pos[2 * t]
                while p > base[2 * t] and kb[p - 1, 0] == thr[2 * t] and beyond(xs, ys, i, l, j, pts[p - 1]):
                    p -= 1
                if p < top[2 * t]:
                    g = g + kb[p, 1]
                p = pos[2 * t + 1]
                while p > base[2 * t + 1] and kb[p - 1, 0] == thr[2 * t + 1] and \
                        beyond(xs, ys, l, j, i, pts[p - 1]):
                    p -= 1
                if p < top[2 * t + 1]:
                    g = g + kb[p, 1]
                m = mc[i]
                tk[i, m] = pencil(xs, ys, i, j, l)
                tg[i, m] = g
                tl[i, m] = l
                mc[i] = m + 1
        for i in range(n):
            m = mc[i]
            if m == 0:
                continue
            j = (i + d) % n
            order = np.argsort(tk[i, :m], kind="mergesort")
            # equal keys mean cocircular points; order them by the perturbed circle test
            for q in range(1, m):
                t = q
                while t > 0 and tk[i, order[t]] == tk[i, order[t - 1]] and \
                        beyond(xs, ys, i, j, tl[i, order[t]], tl[i, order[t - 1]]):
                    order[t], order[t - 1] = order[t - 1], order[t]
                    t -= 1
            o = off[d * n + i]
            run = tg[i, order[m - 1]]
            runarg = tl[i, order[m - 1]]
            for q in range(m - 1, -1, -1):
                idx = order[q]
                kb[o + q, 0] = tk[i, idx]
                pts[o + q] = tl[i, idx]
                if tg[i, idx] > run:
                    run = tg[i, idx]
                    runarg = tl[i, idx]
                kb[o + q, 1] = run
                arg[o + q] = runarg
            f0[i * n + j] = kb[o, 1]
            if stop and kb[o, 1] + w[i] + w[j] >= target:
                return off, cnt, kb, arg, pts, f0, True
    return off, cnt, kb, arg, pts, f0, False


# ---------------------------------------------------------------------------
# size-3 decision for convex position


@njit
def triple_decision(xs, ys, bx0, bx1, by0, by1, cnt, r2, eps):
    """Witness triple with all pairwise distances >= r, or (-1, -1, -1)."""
    n = xs.shape[0]
    if r2 <= eps:
        # every pair passes, and a point would count as far from itself
        if n >= 3:
            return 0, 1, 2
        return -1, -1, -1
    a, b = far_self(xs, ys, bx0, bx1, by0, by1, cnt, r2, eps, False)
    big = 3 * n
    A = np.empty(n, np.int64)
    for k in range(n):
        if a[k] < 0:
            A[k] = big
        elif a[k] > k:
            A[k] = a[k]
        else:
            A[k] = a[k] + n
    # sparse table of argmins
    levels = 1
    while (1 << levels) <= n:
        levels += 1
    sp = np.empty((levels, n), np.int64)
    for k in range(n):
        sp[0, k] = k
    for lv in range(1, levels):
        half = 1 << (lv - 1)
        for k in range(n - (1 << lv) + 1):
            x = sp[lv - 1, k]
            y = sp[lv - 1, k + half]
            sp[lv, k] = x if A[x] <= A[y] else y
    for i in range(n):
        ai = a[i]
        bi = b[i]
        if ai < 0 or ai == bi:
            continue
        k = -1
        if ai < bi:
            c = range_argmin(sp, A, ai, bi)
            if A[c] <= bi:
                k = c
        else:
            c = range_argmin(sp, A, ai, n - 1)
            if A[c] <= bi + n:
                k = c
            else:
                c = range_argmin(sp, A, 0, bi)
                if A[c] <= bi:
                    k = c
        if k < 0:
            continue
        j = k
        k2 = a[k]
        nj = not passes(dist2(xs, ys, i, j), r2, eps, False)
        nk = not passes(dist2(xs, ys, i, k2), r2, eps, False)
        if not nj and not nk:
            return i, j, k2
        if nj and nk:
            return i, ai, bi
        if nj:
            return i, ai, k2
        return i, j, bi
    return -1, -1, -1


@njit
def range_argmin(sp, A, lo, hi):
    length = hi - lo + 1
    lv = 0
    while (1 << (lv + 1)) <= length:
        lv += 1
    x = sp[lv, lo]
    y = sp[lv, hi - (1 << lv) + 1]
    return x if A[x] <= A[y] else y


# ---------------------------------------------------------------------------
# size-3 search over a biclique partition


@njit
def _better(wt, x, y, z, bw, bx, by, bz):
    if bx < 0 or wt > bw:
        return True
    if wt < bw:
        return False
    # lexicographically smaller sorted triple wins ties
    if x > y:
        x, y = y, x
    if y > z:
        y, z = z, y
    if x > y:
        x, y = y, x
    p, q, s = bx, by, bz
    if p > q:
        p, q = q, p
    if q > s:
        q, s = s, q
    if p > q:
        p, q = q, p
    if x != p:
        return x < p
    if y != q:
        return y < q
    return z < s


@njit
def triple_search(xs, ys, w, r2, eps, near, parent, top3, bptr, bidx):
    """Best (weight, a, b, c) over all node/ancestor combinations.

    ``top3[t]`` holds the three heaviest members of node t's point set (-1
    padded) and ``bidx[bptr[t]:bptr[t+1]]`` its attached set, heaviest first.
    """
    nn = parent.shape[0]
    bw = w[0] - w[0]
    bx = -1
    by = -1
    bz = -1
    for t in range(nn):
        for pb in range(bptr[t], bptr[t + 1]):
            b = bidx[pb]
            a0 = -1
            a1 = -1
            for q in range(3):
                x = top3[t, q]
                if x < 0 or x == b:
                    continue
                if a0 < 0:
                    a0 = x
                elif a1 < 0:
                    a1 = x
            if a0 < 0:
                continue
            u = t
            while u >= 0:
                c0 = -1
                c1 = -1
                for pc in range(bptr[u], bptr[u + 1]):
                    c = bidx[pc]
                    if c == b:
                        continue
                    d2 = dist2(xs, ys, b, c)
                    ok = (d2 - r2 <= eps) if near else (d2 - r2 > eps)
                    if not ok:
                        continue
                    if c0 < 0:
                        c0 = c
                    else:
                        c1 = c
                        break
                if c0 >= 0:
                    for ia in range(2):
                        a = a0 if ia == 0 else a1
                        if a < 0:
                            continue
                        for ic in range(2):
                            c = c0 if ic == 0 else c1
                            if c < 0 or c == a:
                                continue
                            wt = w[a] + w[b] + w[c]
                            if _better(wt, a, b, c, bw, bx, by, bz):
                                bw = wt
                                bx = a
                                by = b
                                bz = c
                u = parent[u]
    return bw, bx, by, bz
