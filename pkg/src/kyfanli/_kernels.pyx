# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops. Semantics must stay identical to ``_fallback``."""

from libc.math cimport fabs, sqrt
from libc.stdint cimport uint64_t, int64_t

import numpy as np


cdef inline void _rot(double* x, double* y, double s, double tau) noexcept nogil:
    cdef double g = x[0]
    cdef double h = y[0]
    x[0] = g - s * (h + g * tau)
    y[0] = h + s * (g - h * tau)


def jacobi(double[:, ::1] a, double[:, ::1] v, double rel_tol, int max_sweeps):
    """Cyclic Jacobi on the upper triangle of ``a`` (in place).

    On return the diagonal of ``a`` holds the eigenvalues and, when ``v`` is not
    None, its columns hold the eigenvectors (``v`` must start as the identity).
    Returns the number of sweeps performed, or -1 if the off-diagonal norm did
    not fall below ``rel_tol * ||a||_F`` within ``max_sweeps``.
    """
    cdef Py_ssize_t n = a.shape[0], p, q, j
    cdef double fro = 0.0, off, apq, theta, t, c, s, tau, g, h, sm, tresh
    cdef int sweep, used = -1
    cdef bint vecs = v is not None
    cdef double* A
    if n == 0:
        return 0
    A = &a[0, 0]
    for p in range(n):
        for q in range(p, n):
            if q == p:
                fro += a[p, p] * a[p, p]
            else:
                fro += 2.0 * a[p, q] * a[p, q]
    fro = sqrt(fro)
    with nogil:
        for sweep in range(max_sweeps + 1):
            off = 0.0
            for p in range(n):
                for q in range(p + 1, n):
                    off += a[p, q] * a[p, q]
            off = sqrt(2.0 * off)
            if off <= rel_tol * fro:
                used = sweep
                break
            if sweep == max_sweeps:
                break
            # early sweeps skip small elements; late sweeps drop negligible ones
            tresh = 0.0
            if sweep < 3:
                sm = 0.0
                for p in range(n):
                    for q in range(p + 1, n):
                        sm += fabs(a[p, q])
                tresh = 0.2 * sm / (n * n)
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    g = 100.0 * fabs(apq)
                    if sweep > 3 and fabs(a[p, p]) + g == fabs(a[p, p]) and fabs(a[q, q]) + g == fabs(a[q, q]):
                        a[p, q] = 0.0
                        continue
                    if fabs(apq) <= tresh or apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    tau = s / (1.0 + c)
                    a[p, p] -= t * apq
                    a[q, q] += t * apq
                    a[p, q] = 0.0
                    for j in range(p):
                        _rot(&A[j * n + p], &A[j * n + q], s, tau)
                    for j in range(p + 1, q):
                        _rot(&A[p * n + j], &A[j * n + q], s, tau)
                    for j in range(q + 1, n):
                        _rot(&A[p * n + j], &A[q * n + j], s, tau)
                    if vecs:
                        for j in range(n):
                            g = v[j, p]
                            h = v[j, q]
                            v[j, p] = g - s * (h + g * tau)
                            v[j, q] = h + s * (g - h * tau)
    return used


# ---------------------------------------------------------------------------
# orderly brute force over labeled graphs


cdef int _smaller_exists(int depth, int n, uint64_t* adj, int* img, int* used,
                         unsigned char* bits) noexcept nogil:
    # 1: some completion of img gives a lexicographically smaller bit string.
    cdef int w, i, res, b, s
    cdef int base
    if depth == n:
        return 0
    base = depth * (depth - 1) // 2
    for w in range(n):
        if used[w]:
            continue
        res = 0  # 0 equal so far, -1 smaller, 1 larger
        for i in range(depth):
            b = <int>((adj[img[i]] >> w) & 1)
            s = bits[base + i]
            if b != s:
                res = -1 if b < s else 1
                break
        if res == -1:
            return 1
        if res == 1:
            continue
        used[w] = 1
        img[depth] = w
        if _smaller_exists(depth + 1, n, adj, img, used, bits):
            used[w] = 0
            return 1
        used[w] = 0
    return 0


cdef inline uint64_t _next_same_popcount(uint64_t x) noexcept nogil:
    cdef uint64_t c = x & (~x + 1)
    cdef uint64_t r = x + c
    return (((r ^ x) >> 2) // c) | r


def canonical_connected_masks(int n, int m=-1, bint connected=True):
    """All graph6-order edge masks on ``n`` vertices that are lexicographically
    minimal in their isomorphism class (and connected, unless disabled).

    ``m >= 0`` restricts to masks with exactly ``m`` edges.
    """
    if n < 1 or n > 9:
        raise ValueError("brute-force enumeration supports 1 <= n <= 9")
    cdef int E = n * (n - 1) // 2
    cdef int ei[64]
    cdef int ej[64]
    cdef uint64_t adj[16]
    cdef int img[16]
    cdef int used[16]
    cdef unsigned char bits[64]
    cdef int k, i, j, v
    cdef uint64_t mask, last, reach, grow, full
    cdef bint ok
    cdef list out = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            ei[k] = i
            ej[k] = j
            k += 1
    full = (<uint64_t>1 << n) - 1
    last = (<uint64_t>1 << E)
    if m > E:
        return out
    if m >= 0:
        mask = (<uint64_t>1 << m) - 1
    else:
        mask = 0
    while mask < last:
        for v in range(n):
            adj[v] = 0
            used[v] = 0
        for k in range(E):
            bits[k] = <unsigned char>((mask >> k) & 1)
            if bits[k]:
                adj[ei[k]] |= (<uint64_t>1 << ej[k])
                adj[ej[k]] |= (<uint64_t>1 << ei[k])
        ok = True
        if connected:
            reach = 1
            while True:
                grow = reach
                for v in range(n):
                    if (reach >> v) & 1:
                        grow |= adj[v]
                if grow == reach:
                    break
                reach = grow
            ok = reach == full
        if ok and not _smaller_exists(0, n, adj, img, used, bits):
            out.append(int(mask))
        if m >= 0:
            if m == 0:
                break
            mask = _next_same_popcount(mask)
        else:
            mask += 1
    return out


# ---------------------------------------------------------------------------
# isomorphism backtracking


cdef int _extend(int depth, int n, const uint64_t* a1, const uint64_t* a2,
                 const int64_t* c1, const int64_t* c2, const int* order,
                 int* img, int* used) noexcept nogil:
    cdef int v, w, i, u
    if depth == n:
        return 1
    v = order[depth]
    for w in range(n):
        if used[w] or c2[w] != c1[v]:
            continue
        for i in range(depth):
            u = order[i]
            if ((a1[v] >> u) & 1) != ((a2[w] >> img[u]) & 1):
                break
        else:
            used[w] = 1
            img[v] = w
            if _extend(depth + 1, n, a1, a2, c1, c2, order, img, used):
                return 1
            used[w] = 0
    return 0


def iso_map(adj1, adj2, col1, col2, order):
    """Vertex map G1 -> G2 respecting adjacency and colors, or None."""
    cdef int n = len(adj1)
    if n > 64:
        raise ValueError("bitset backtracking supports n <= 64")
    cdef uint64_t[::1] a1 = np.asarray(adj1, dtype=np.uint64)
    cdef uint64_t[::1] a2 = np.asarray(adj2, dtype=np.uint64)
    cdef int64_t[::1] c1 = np.asarray(col1, dtype=np.int64)
    cdef int64_t[::1] c2 = np.asarray(col2, dtype=np.int64)
    cdef int[::1] od = np.asarray(order, dtype=np.intc)
    cdef int img[64]
    cdef int used[64]
    cdef int i, found
    if n == 0:
        return []
    for i in range(n):
        img[i] = -1
        used[i] = 0
    with nogil:
        found = _extend(0, n, &a1[0], &a2[0], &c1[0], &c2[0], &od[0], img, used)
    if not found:
        return None
    return [img[i] for i in range(n)]
