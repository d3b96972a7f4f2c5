"""Pure-Python kernels; the fallback when the compiled module is missing.

Curves are y^2 = x^3 + a2 x^2 + a4 x + a6 over F_p, p odd.
"""

import numpy as np


def _legendre_table(p):
    sq = [-1] * p
    sq[0] = 0
    for y in range(1, (p + 1) // 2):
        sq[y * y % p] = 1
    return sq


def legendre_traces(p):
    """a_p(lambda) = -sum_x phi(x(x-1)(x-lambda)) for every lambda in 0..p-1."""
    sq = np.array(_legendre_table(p), dtype=np.int64)
    x = np.arange(p, dtype=np.int64)
    base = x * (x - 1) % p
    out = np.empty(p, dtype=np.int64)
    for lam in range(p):
        out[lam] = -sq[base * ((x - lam) % p) % p].sum()
    return out


def cubic_trace(p, a2, a4, a6):
    sq = _legendre_table(p)
    total = 0
    for x in range(p):
        total += sq[(((x + a2) * x + a4) * x + a6) % p]
    return -total


def _add(P, Q, p, a2, a4, inv):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        m = (3 * x1 * x1 + 2 * a2 * x1 + a4) * inv[2 * y1 % p] % p
    else:
        m = (y2 - y1) * inv[(x2 - x1) % p] % p
    x3 = (m * m - a2 - x1 - x2) % p
    y3 = (-(y1 + m * (x3 - x1))) % p
    return (x3, y3)


def _mul(P, m, p, a2, a4, inv):
    R = None
    while m:
        if m & 1:
            R = _add(R, P, p, a2, a4, inv)
        P = _add(P, P, p, a2, a4, inv)
        m >>= 1
    return R


def affine_points(p, a2, a4, a6):
    roots = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    pts = []
    for x in range(p):
        for y in roots.get((((x + a2) * x + a4) * x + a6) % p, ()):
            pts.append((x, y))
    return pts


def torsion_count(p, a2, a4, a6, m):
    """Number of points P (infinity included) with [m]P = O."""
    inv = [0] + [pow(v, p - 2, p) for v in range(1, p)]
    count = 1
    for P in affine_points(p, a2, a4, a6):
        if _mul(P, m, p, a2, a4, inv) is None:
            count += 1
    return count


def weierstrass_classes(p):
    """Class label for every short Weierstrass pair (A, B), flattened A*p + B.

    Pairs related by (A, B) -> (u^4 A, u^6 B) share a label: the flattened
    index of the lexicographically smallest member.  Singular pairs get -1.
    """
    labels = np.full(p * p, -2, dtype=np.int64)
    u4 = [pow(u, 4, p) for u in range(1, p)]
    u6 = [pow(u, 6, p) for u in range(1, p)]
    for A in range(p):
        for B in range(p):
            idx = A * p + B
            if labels[idx] != -2:
                continue
            if (4 * A * A * A + 27 * B * B) % p == 0:
                labels[idx] = -1
                continue
            for s4, s6 in zip(u4, u6):
                labels[s4 * A % p * p + s6 * B % p] = idx
    return labels
