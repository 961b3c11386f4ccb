# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see _kernels_py.py for the reference semantics."""
from libc.math cimport fabs, pow, cos, sin, floor, copysign, isinf, INFINITY, M_PI
from libc.stdlib cimport malloc, free


cdef inline double _pnorm(double p, double x, double y) nogil:
    cdef double m
    x = fabs(x)
    y = fabs(y)
    m = x if x > y else y
    if isinf(p):
        return m
    if m == 0.0:
        return 0.0
    return m * pow(pow(x / m, p) + pow(y / m, p), 1.0 / p)


def min_lattice_norm(double p, double ux, double uy, double vx, double vy, long bound):
    cdef double best = INFINITY, r
    cdef long a, b, best_a = 0, best_b = 0
    with nogil:
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if a == 0 and b == 0:
                    continue
                r = _pnorm(p, a * ux + b * vx, a * uy + b * vy)
                if r < best:
                    best = r
                    best_a = a
                    best_b = b
    return best, best_a, best_b


def hexagon_grid_max(double p, int steps):
    cdef double *xs = <double *> malloc(steps * sizeof(double))
    cdef double *ys = <double *> malloc(steps * sizeof(double))
    if xs == NULL or ys == NULL:
        free(xs)
        free(ys)
        raise MemoryError()
    cdef double e = 2.0 / p, th, c, s
    cdef double x1, y1, x3, y3, c13, dx, dy, a, best = -1.0
    cdef int t, i, j, k, km, half = steps // 2, bi = 0, bj = 0, bk = 0
    try:
        for t in range(steps):
            th = 2.0 * M_PI * t / steps
            c = cos(th)
            s = sin(th)
            xs[t] = copysign(pow(fabs(c), e), c)
            ys[t] = copysign(pow(fabs(s), e), s)
        with nogil:
            for i in range(half):
                x1 = xs[i]
                y1 = ys[i]
                for k in range(i + 2, i + half):
                    km = k % steps
                    x3 = xs[km]
                    y3 = ys[km]
                    c13 = x1 * y3 - y1 * x3
                    dx = x3 - x1
                    dy = y3 - y1
                    for j in range(i + 1, k):
                        a = c13 + xs[j] * dy - ys[j] * dx
                        if a > best:
                            best = a
                            bi = i
                            bj = j
                            bk = k
    finally:
        free(xs)
        free(ys)
    return best, bi, bj, bk


def count_level_set(int n, double c, long m, long box):
    cdef long width = 2 * box + 1
    cdef long *vals = <long *> malloc(width * sizeof(long))
    cdef long long *cur = <long long *> malloc((m + 1) * sizeof(long long))
    cdef long long *nxt = <long long *> malloc((m + 1) * sizeof(long long))
    cdef long x, s, v, t
    cdef int step
    if vals == NULL or cur == NULL or nxt == NULL:
        free(vals)
        free(cur)
        free(nxt)
        raise MemoryError()
    try:
        for x in range(width):
            vals[x] = <long> floor(pow(fabs(<double> (x - box)), c))
        for s in range(m + 1):
            cur[s] = 0
        cur[0] = 1
        for step in range(n):
            for s in range(m + 1):
                nxt[s] = 0
            for s in range(m + 1):
                if cur[s] == 0:
                    continue
                for x in range(width):
                    t = s + vals[x]
                    if t <= m:
                        nxt[t] += cur[s]
            for s in range(m + 1):
                cur[s] = nxt[s]
        return cur[m]
    finally:
        free(vals)
        free(cur)
        free(nxt)
