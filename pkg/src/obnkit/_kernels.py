"""Compiled inner loops.

Bitsets are int64 with bit ``v`` for vertex ``v``, so kernels take n <= 62.
``balls[v, r]`` is the out-ball of radius ``r`` around ``v``; rows saturate
once the reachable set stops growing.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_N = 62


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def out_masks(n, eu, ev, mask, out):
    for v in range(n):
        out[v] = 0
    one = np.int64(1)
    for i in range(eu.shape[0]):
        if (mask >> i) & 1:
            out[ev[i]] |= one << eu[i]
        else:
            out[eu[i]] |= one << ev[i]


@njit(cache=True)
def fill_balls(out, n, R, balls):
    one = np.int64(1)
    for v in range(n):
        cur = one << v
        balls[v, 0] = cur
        frontier = cur
        r = 1
        while r <= R:
            nxt = cur
            for u in range(n):
                if (frontier >> u) & 1:
                    nxt |= out[u]
            frontier = nxt & ~cur
            cur = nxt
            balls[v, r] = cur
            r += 1
            if frontier == 0:
                while r <= R:
                    balls[v, r] = cur
                    r += 1


@njit(cache=True)
def _setup(balls, n, b, d, cov, full, sources, cand, gains, ncand, ci):
    """Candidate fires at depth ``d`` (radius ``b-1-d``); empty list means prune."""
    r = b - 1 - d
    unc = full & ~cov[d]
    ncand[d] = 0
    ci[d] = 0
    need = popcount(unc)
    # every uncovered source needs a fire of its own
    if popcount(unc & sources) > r + 1:
        return
    # optimistic coverage: best single ball at every remaining radius
    total = 0
    for rr in range(r, -1, -1):
        if rr == 0:
            total += 1
            break
        best = 0
        for v in range(n):
            c = popcount(balls[v, rr] & unc)
            if c > best:
                best = c
        total += best
        if total >= need:
            break
    if total < need:
        return
    k = 0
    for v in range(n):
        g = balls[v, r] & unc
        if g == 0:
            continue
        dup = False
        for j in range(k):
            if gains[d, j] == g:
                dup = True
                break
        if dup:
            continue
        # insertion by (gain size desc, index asc)
        pc = popcount(g)
        j = k
        while j > 0 and popcount(gains[d, j - 1]) < pc:
            gains[d, j] = gains[d, j - 1]
            cand[d, j] = cand[d, j - 1]
            j -= 1
        gains[d, j] = g
        cand[d, j] = v
        k += 1
    ncand[d] = k


@njit(cache=True)
def can_burn(balls, n, b, sched):
    """Is there a burning sequence of length ``b``?  Fills ``sched[0:b]`` if so."""
    one = np.int64(1)
    full = (one << n) - 1
    if b <= 0:
        return full == 0
    if full == 0:
        for r in range(b):
            sched[r] = 0
        return True
    if b >= n:
        for r in range(b):
            sched[r] = r if r < n else 0
        return True
    reach_any = np.int64(0)
    for v in range(n):
        reach_any |= balls[v, 1] & ~(one << v)
    sources = full & ~reach_any
    cov = np.zeros(b + 1, np.int64)
    cand = np.zeros((b, n), np.int64)
    gains = np.zeros((b, n), np.int64)
    ncand = np.zeros(b, np.int64)
    ci = np.zeros(b, np.int64)
    d = 0
    _setup(balls, n, b, d, cov, full, sources, cand, gains, ncand, ci)
    while True:
        if ci[d] >= ncand[d]:
            if d == 0:
                return False
            d -= 1
            ci[d] += 1
            continue
        v = cand[d, ci[d]]
        r = b - 1 - d
        c = cov[d] | balls[v, r]
        sched[r] = v
        if c == full:
            for rr in range(r):
                sched[rr] = 0
            return True
        if r == 0:
            ci[d] += 1
            continue
        d += 1
        cov[d] = c
        _setup(balls, n, b, d, cov, full, sources, cand, gains, ncand, ci)


@njit(cache=True)
def burning_number(balls, n, lb, sched):
    b = lb if lb > 1 else 1
    if n == 0:
        return 0
    while not can_burn(balls, n, b, sched):
        b += 1
    return b


@njit(cache=True)
def obn_scan(n, eu, ev, lo, hi, best, upper):
    """Scan masks ``lo..hi-1``; returns ``(best, best_mask, explored)``.

    Each orientation is first asked whether it burns in ``best`` steps; only
    orientations that cannot get a full burning-number computation.
    ``best_mask`` is -1 when nothing beat the incoming ``best``.
    """
    out = np.zeros(n, np.int64)
    balls = np.zeros((n, n), np.int64)
    sched = np.zeros(n + 1, np.int64)
    best_mask = np.int64(-1)
    explored = np.int64(0)
    for mask in range(lo, hi):
        if best >= upper:
            break
        explored += 1
        out_masks(n, eu, ev, mask, out)
        fill_balls(out, n, n - 1, balls)
        if can_burn(balls, n, best, sched):
            continue
        b = best + 1
        while not can_burn(balls, n, b, sched):
            b += 1
        best = b
        best_mask = mask
    return best, best_mask, explored


@njit(cache=True)
def max_fire_check(n, eu, ev, lo, hi, b):
    """First mask in ``lo..hi-1`` that cannot be burned in ``b`` steps, else -1."""
    out = np.zeros(n, np.int64)
    balls = np.zeros((n, n), np.int64)
    sched = np.zeros(n + 1, np.int64)
    for mask in range(lo, hi):
        out_masks(n, eu, ev, mask, out)
        fill_balls(out, n, n - 1, balls)
        if not can_burn(balls, n, b, sched):
            return mask
    return -1


def edge_arrays(g):
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    return eu, ev


def balls_for(o):
    n = o.n
    out = np.array(o.out_mask, dtype=np.int64) if n else np.zeros(0, np.int64)
    balls = np.zeros((n, max(n, 1)), np.int64)
    fill_balls(out, n, max(n - 1, 0), balls)
    return balls
