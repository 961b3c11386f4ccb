"""Pure-Python implementations of the hot loops.

Mirrors ``_kernels.pyx`` function for function; selected at import when the
compiled extension is unavailable.
"""
import math


def _pnorm(p, x, y):
    x, y = abs(x), abs(y)
    if p == math.inf:
        return max(x, y)
    m = max(x, y)
    if m == 0.0:
        return 0.0
    return m * ((x / m) ** p + (y / m) ** p) ** (1.0 / p)


def min_lattice_norm(p, ux, uy, vx, vy, bound):
    """Smallest p-norm of a*u + b*v over nonzero |a|, |b| <= bound.

    Returns (norm, a, b); ties resolve to the first pair in lexicographic order.
    """
    best = math.inf
    best_a = best_b = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a == 0 and b == 0:
                continue
            r = _pnorm(p, a * ux + b * vx, a * uy + b * vy)
            if r < best:
                best, best_a, best_b = r, a, b
    return best, best_a, best_b


def hexagon_grid_max(p, steps):
    """Grid search for the largest centrally symmetric inscribed hexagon.

    Vertices are boundary points at theta = 2*pi*k/steps with indices
    i < j < k < i + steps/2, plus their negatives. Returns (area, i, j, k).
    """
    e = 2.0 / p
    xs = []
    ys = []
    for t in range(steps):
        th = 2.0 * math.pi * t / steps
        c, s = math.cos(th), math.sin(th)
        xs.append(math.copysign(abs(c) ** e, c))
        ys.append(math.copysign(abs(s) ** e, s))
    half = steps // 2
    best = -1.0
    bi = bj = bk = 0
    for i in range(half):
        x1, y1 = xs[i], ys[i]
        for k in range(i + 2, i + half):
            x3, y3 = xs[k % steps], ys[k % steps]
            c13 = x1 * y3 - y1 * x3
            dx, dy = x3 - x1, y3 - y1
            # area = c13 + cross(w2, w3 - w1); maximise over j
            for j in range(i + 1, k):
                a = c13 + xs[j] * dy - ys[j] * dx
                if a > best:
                    best, bi, bj, bk = a, i, j, k
    return best, bi, bj, bk


def count_level_set(n, c, m, box):
    """Number of x in [-box, box]^n with sum(floor(|x_i|^c)) == m."""
    vals = [int(math.floor(abs(x) ** c)) for x in range(-box, box + 1)]
    counts = {0: 1}
    for _ in range(n):
        nxt = {}
        for s, cnt in counts.items():
            for v in vals:
                t = s + v
                if t <= m:
                    nxt[t] = nxt.get(t, 0) + cnt
        counts = nxt
    return counts.get(m, 0)
