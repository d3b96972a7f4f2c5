# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the routines in _pykernels.  Same signatures and results."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64


cdef inline i64 _mod(i64 a, i64 p) nogil:
    a %= p
    return a + p if a < 0 else a


cdef i64[::1] _legendre(i64 p):
    cdef i64[::1] sq = np.full(p, -1, dtype=np.int64)
    cdef i64 y
    sq[0] = 0
    for y in range(1, (p + 1) // 2):
        sq[y * y % p] = 1
    return sq


cdef i64[::1] _inverses(i64 p):
    cdef i64[::1] inv = np.zeros(p, dtype=np.int64)
    cdef i64 v
    for v in range(1, p):
        inv[v] = pow(v, p - 2, p)
    return inv


def legendre_traces(i64 p):
    cdef i64[::1] sq = _legendre(p)
    cdef cnp.ndarray[i64, ndim=1] out = np.empty(p, dtype=np.int64)
    cdef i64 lam, x, total, base
    for lam in range(p):
        total = 0
        for x in range(p):
            base = x * (x - 1 + p) % p
            total += sq[base * _mod(x - lam, p) % p]
        out[lam] = -total
    return out


def cubic_trace(i64 p, i64 a2, i64 a4, i64 a6):
    cdef i64[::1] sq = _legendre(p)
    cdef i64 x, total = 0
    a2 = _mod(a2, p); a4 = _mod(a4, p); a6 = _mod(a6, p)
    for x in range(p):
        total += sq[(((x + a2) * x % p + a4) * x % p + a6) % p]
    return -total


cdef struct Pt:
    i64 x
    i64 y
    bint inf


cdef inline Pt _add(Pt P, Pt Q, i64 p, i64 a2, i64 a4, i64[::1] inv) nogil:
    cdef Pt R
    cdef i64 m
    if P.inf:
        return Q
    if Q.inf:
        return P
    if P.x == Q.x:
        if (P.y + Q.y) % p == 0:
            R.inf = True
            R.x = 0
            R.y = 0
            return R
        m = (3 * P.x % p * P.x + 2 * a2 * P.x + a4) % p * inv[2 * P.y % p] % p
    else:
        m = _mod(Q.y - P.y, p) * inv[_mod(Q.x - P.x, p)] % p
    R.inf = False
    R.x = _mod(m * m - a2 - P.x - Q.x, p)
    R.y = _mod(-(P.y + m * _mod(R.x - P.x, p)), p)
    return R


cdef inline bint _kills(Pt P, i64 m, i64 p, i64 a2, i64 a4, i64[::1] inv) nogil:
    cdef Pt R
    R.inf = True
    R.x = 0
    R.y = 0
    while m:
        if m & 1:
            R = _add(R, P, p, a2, a4, inv)
        P = _add(P, P, p, a2, a4, inv)
        m >>= 1
    return R.inf


def torsion_count(i64 p, i64 a2, i64 a4, i64 a6, i64 m):
    cdef i64[::1] inv = _inverses(p)
    cdef i64[::1] sq = _legendre(p)
    cdef i64 x, y, rhs, count = 1
    cdef Pt P
    a2 = _mod(a2, p); a4 = _mod(a4, p); a6 = _mod(a6, p)
    # square roots by table: root[v] is one y with y^2 = v
    cdef i64[::1] root = np.zeros(p, dtype=np.int64)
    for y in range(1, (p + 1) // 2):
        root[y * y % p] = y
    P.inf = False
    for x in range(p):
        rhs = (((x + a2) * x % p + a4) * x % p + a6) % p
        if rhs == 0:
            P.x = x
            P.y = 0
            if _kills(P, m, p, a2, a4, inv):
                count += 1
        elif sq[rhs] == 1:
            P.x = x
            P.y = root[rhs]
            if _kills(P, m, p, a2, a4, inv):
                # [m]P = O iff [m](-P) = O
                count += 2
    return count


def weierstrass_classes(i64 p):
    cdef cnp.ndarray[i64, ndim=1] labels = np.full(p * p, -2, dtype=np.int64)
    cdef i64[::1] u4 = np.empty(p - 1, dtype=np.int64)
    cdef i64[::1] u6 = np.empty(p - 1, dtype=np.int64)
    cdef i64 u, A, B, idx, k
    for u in range(1, p):
        u4[u - 1] = pow(u, 4, p)
        u6[u - 1] = pow(u, 6, p)
    for A in range(p):
        for B in range(p):
            idx = A * p + B
            if labels[idx] != -2:
                continue
            if (4 * A * A % p * A + 27 * B * B) % p == 0:
                labels[idx] = -1
                continue
            for k in range(p - 1):
                labels[u4[k] * A % p * p + u6[k] * B % p] = idx
    return labels
