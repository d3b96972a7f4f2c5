"""The Legendre family y^2 = x(x-1)(x-lambda) and brute-force curve censuses.

Everything here is exact integer arithmetic over F_p.  Point counts and
group structures come from the kernels in :mod:`ffhyp.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from . import kernels
from .classno import hurwitz
from .fieldcore import divisors, is_prime, legendre, make_field

CENSUS_PMAX = 200


@dataclass(frozen=True)
class LegendreCurve:
    lam: int
    p: int

    def __post_init__(self):
        if self.lam % self.p in (0, 1):
            raise ValueError(f"lambda={self.lam} is singular (must avoid 0 and 1 mod {self.p})")

    def coefficients(self) -> tuple[int, int, int]:
        """(a2, a4, a6) of x^3 + a2 x^2 + a4 x + a6 = x(x-1)(x-lambda)."""
        p, lam = self.p, self.lam % self.p
        return ((-1 - lam) % p, lam, 0)


@dataclass(frozen=True)
class CurveCensusEntry:
    s: int
    n: int
    count: int


def _nonsingular_lambda(lam: int, p: int) -> int:
    lam %= p
    if lam in (0, 1):
        raise ValueError(f"lambda={lam} mod {p} gives a singular curve")
    return lam


@lru_cache(maxsize=None)
def legendre_traces(p: int) -> np.ndarray:
    """Read-only array of a_p(lambda) for every residue lambda."""
    out = kernels.legendre_traces(p)
    out.setflags(write=False)
    return out


def ap_lambda(lam: int, p: int) -> int:
    return int(legendre_traces(p)[_nonsingular_lambda(lam, p)])


def twist_trace(lam: int, t: int, p: int) -> int:
    """Trace of y^2 = x(x - t)(x - t*lambda), by a direct Legendre sum."""
    lam = _nonsingular_lambda(lam, p)
    t %= p
    if t == 0:
        raise ValueError("twist parameter must be nonzero")
    return kernels.cubic_trace(p, (-t - t * lam) % p, t * t * lam % p, 0)


def j_invariant(lam: int, p: int) -> int:
    lam = _nonsingular_lambda(lam, p)
    num = 256 * pow(lam * lam - lam + 1, 3, p)
    den = lam * lam * (lam - 1) ** 2
    return num * pow(den, -1, p) % p


def j_orbit(lam: int, p: int) -> set[int]:
    lam = _nonsingular_lambda(lam, p)
    inv = lambda v: pow(v, -1, p)
    return {
        lam,
        inv(lam),
        (1 - lam) % p,
        inv((1 - lam) % p),
        lam * inv((lam - 1) % p) % p,
        (lam - 1) * inv(lam) % p,
    }


# ---------------------------------------------------------------------------
# General Weierstrass curves y^2 = x^3 + a2 x^2 + a4 x + a6.


def discriminant(a2: int, a4: int, a6: int) -> int:
    # discriminant of the cubic; the curve is singular iff it vanishes mod p
    return a2 * a2 * a4 * a4 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6 - 27 * a6 * a6 + 18 * a2 * a4 * a6


def point_count(p: int, a2: int, a4: int, a6: int) -> int:
    return p + 1 - kernels.cubic_trace(p, a2, a4, a6)


def group_structure(p: int, a2: int, a4: int, a6: int, bound: int = CENSUS_PMAX) -> tuple[int, int]:
    """Invariant factors (n1, n2), n1 | n2, of E(F_p).

    n1 is the largest d with d | p - 1, d^2 | #E and all d^2 points of
    E[d] rational; the count of points killed by d is gcd(d,n1)*gcd(d,n2).
    """
    if p > bound:
        raise ValueError(f"p={p} exceeds the census bound {bound}")
    if discriminant(a2, a4, a6) % p == 0:
        raise ValueError("singular curve")
    N = point_count(p, a2, a4, a6)
    for d in reversed(divisors(gcd(N, p - 1))):
        if N % (d * d) == 0 and kernels.torsion_count(p, a2 % p, a4 % p, a6 % p, d) == d * d:
            return d, N // d
    raise AssertionError("unreachable: d = 1 always qualifies")


def contains(structure: tuple[int, int], m1: int, m2: int) -> bool:
    """Whether Z/m1 x Z/m2 (m1 | m2) embeds in Z/n1 x Z/n2."""
    n1, n2 = structure
    return n1 % m1 == 0 and n2 % m2 == 0


def short_form(p: int, a2: int, a4: int, a6: int) -> tuple[int, int]:
    """(A, B) with y^2 = x^3 + A x + B isomorphic over F_p, for p >= 5."""
    i3 = pow(3, -1, p)
    A = (a4 - a2 * a2 * i3) % p
    B = (a6 - a2 * a4 * i3 + 2 * pow(a2, 3, p) * pow(27, -1, p)) % p
    return A, B


@lru_cache(maxsize=None)
def weierstrass_classes(p: int) -> np.ndarray:
    """Class label per (A, B), flattened as A*p + B; -1 on singular pairs."""
    if p < 5:
        raise ValueError("short Weierstrass classification needs p >= 5")
    out = kernels.weierstrass_classes(p)
    out.setflags(write=False)
    return out


def iso_class(p: int, a2: int, a4: int, a6: int) -> int:
    A, B = short_form(p, a2, a4, a6)
    return int(weierstrass_classes(p)[A * p + B])


@lru_cache(maxsize=None)
def class_table(p: int) -> dict[int, tuple[int, tuple[int, int]]]:
    """For every isomorphism class label: (trace s, group structure)."""
    labels = weierstrass_classes(p)
    out = {}
    for label in np.unique(labels[labels >= 0]):
        A, B = divmod(int(label), p)
        structure = group_structure(p, 0, A, B)
        out[int(label)] = (p + 1 - structure[0] * structure[1], structure)
    return out


def census_conditions(s: int, n: int, p: int) -> list[str]:
    failed = []
    if p < 5 or not is_prime(p):
        failed.append("p must be a prime >= 5")
    if s * s > 4 * p:
        failed.append("s^2 <= 4p")
    if p and s % p == 0:
        failed.append("p does not divide s")
    if n < 1 or (p - 1) % n:
        failed.append("n | p-1")
    elif (p + 1 - s) % (n * n):
        failed.append("n^2 | p+1-s")
    return failed


def census(s: int, n: int, p: int) -> CurveCensusEntry:
    failed = census_conditions(s, n, p)
    if failed:
        raise ValueError(f"census(s={s}, n={n}, p={p}) violates: {', '.join(failed)}")
    count = sum(
        1 for trace, structure in class_table(p).values()
        if trace == s and structure[0] % n == 0
    )
    return CurveCensusEntry(s, n, count)


def admissible_census_pairs(p: int) -> list[tuple[int, int]]:
    bound = isqrt(4 * p)
    return [
        (s, n)
        for s in range(-bound, bound + 1)
        for n in divisors(p - 1)
        if not census_conditions(s, n, p)
    ]


def schoof_count(s: int, n: int, p: int):
    """The class-number side H((s^2 - 4p)/n^2) of the census identity."""
    m, r = divmod(s * s - 4 * p, n * n)
    if r or m % 4 not in (0, 1):
        raise ValueError(f"(s^2-4p)/n^2 = {(s * s - 4 * p) / (n * n)} is not a discriminant")
    return hurwitz(m)[0]


# ---------------------------------------------------------------------------
# 2-isogeny partner and the character-weighted sums over the family.


def sqrt_mod(a: int, p: int) -> list[int]:
    """All square roots of a mod p, smallest lift first."""
    a %= p
    return [y for y in range(p) if y * y % p == a]


def isogeny_partner(lam: int, p: int) -> int:
    """psi = ((1-t)/(1+t))^2 for the smallest square root t of lambda."""
    if p % 4 != 1:
        raise ValueError("isogeny_partner needs p = 1 mod 4")
    lam = _nonsingular_lambda(lam, p)
    roots = sqrt_mod(lam, p)
    if not roots:
        raise ValueError(f"lambda={lam} is not a square mod {p}")
    t = next(r for r in roots if (1 + r) % p)
    return ((1 - t) * pow(1 + t, -1, p)) ** 2 % p


def quartic_value(x: int, ctx) -> int:
    """chi4(x) as an exponent of i (0..3), or None when x = 0."""
    x %= ctx.p
    return None if x == 0 else int(ctx.dlog[x]) % 4


def _ipow(e: int) -> complex:
    return (1, 1j, -1, -1j)[e % 4]


def lemma_family_sums(p: int) -> dict[str, complex | int]:
    """Exact character-weighted sums of a_p(lambda) over lambda = 2..p-1.

    Keys:
      square_sum   sum of a_p over square lambda
      mixed_nonsq  sum over phi(l(l-1)) = -1 of a_p chi4(l(l-1)) phi(l-1)
      mixed_sq     same over phi(l(l-1)) = 1
      square_twist sum over square l of a_p chi4(l) phi(l-1)
      s_lambda     sum over chi4(l) = 1, phi(l-1) = -1
      s_psi        sum over phi(l) = 1, chi4(l) = -1, phi(l-1) = 1
      full_twist   -sum over all l of a_p chi4(l(l-1)) phi(l-1)
    The chi4-weighted keys are only present for p = 1 mod 4.
    """
    ctx = make_field(p)
    ap = legendre_traces(p)
    phi = lambda v: legendre(v, ctx)
    out: dict[str, complex | int] = {
        "square_sum": sum(int(ap[l]) for l in range(2, p) if phi(l) == 1)
    }
    if p % 4 != 1:
        return out
    mixed_nonsq = mixed_sq = square_twist = full = 0j
    s_lambda = s_psi = 0
    for l in range(2, p):
        a = int(ap[l])
        e = quartic_value(l * (l - 1), ctx)
        w = a * _ipow(e) * phi(l - 1)
        full += w
        if phi(l * (l - 1)) == -1:
            mixed_nonsq += w
        else:
            mixed_sq += w
        if phi(l) == 1:
            square_twist += a * _ipow(quartic_value(l, ctx)) * phi(l - 1)
        c4 = _ipow(quartic_value(l, ctx))
        if c4 == 1 and phi(l - 1) == -1:
            s_lambda += a
        if phi(l) == 1 and c4 == -1 and phi(l - 1) == 1:
            s_psi += a
    out.update(
        mixed_nonsq=mixed_nonsq,
        mixed_sq=mixed_sq,
        square_twist=square_twist,
        s_lambda=s_lambda,
        s_psi=s_psi,
        full_twist=-full,
    )
    return out
