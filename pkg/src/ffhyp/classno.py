"""Class numbers of imaginary quadratic orders by reduced-form enumeration.

All quantities are exact: integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .fieldcore import divisors, kronecker, prime_factors


@dataclass(frozen=True)
class ClassData:
    D: int
    h: int
    omega: int
    hstar: Fraction
    Hagg: Fraction
    Hstaragg: Fraction


@dataclass(frozen=True)
class FundDecomp:
    m: int
    t: int
    D: int


def _check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant (need D < 0, D = 0 or 1 mod 4)")


def _squarefree(n: int) -> bool:
    n = abs(n)
    return all(n % (q * q) for q in prime_factors(n)) if n > 1 else True


def is_fundamental(D: int) -> bool:
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        k = D // 4
        return k % 4 in (2, 3) and _squarefree(k)
    return False


def reduced_forms(D: int, primitive: bool = True) -> list[tuple[int, int, int]]:
    """Reduced forms (a, b, c) of discriminant D in lexicographic order.

    |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
    """
    _check_discriminant(D)
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if primitive and gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return forms


def omega(D: int) -> int:
    return {-3: 3, -4: 2}.get(D, 1)


@lru_cache(maxsize=None)
def class_number(D: int) -> tuple[int, int, Fraction]:
    """(h, omega, h*) for the order of discriminant D."""
    h = len(reduced_forms(D))
    w = omega(D)
    return h, w, Fraction(h, w)


def fund_decompose(m: int) -> FundDecomp:
    _check_discriminant(m)
    for t in range(isqrt(-m), 0, -1):
        if m % (t * t) == 0 and is_fundamental(m // (t * t)):
            return FundDecomp(m, t, m // (t * t))
    raise AssertionError(f"no fundamental decomposition for {m}")


def hstar_by_conductor(D_fund: int, f: int) -> Fraction:
    """h*(f^2 D_fund) from h*(D_fund) and the conductor f."""
    if not is_fundamental(D_fund):
        raise ValueError(f"{D_fund} is not a fundamental discriminant")
    value = class_number(D_fund)[2] * f
    for l in prime_factors(f):
        value *= 1 - Fraction(kronecker(D_fund, l), l)
    return value


@lru_cache(maxsize=None)
def hurwitz(D: int) -> tuple[Fraction, Fraction]:
    """(H(D), H*(D)): sums of h and h* over the orders containing O(D)."""
    dec = fund_decompose(D)
    H = Fraction(0)
    Hs = Fraction(0)
    for f in divisors(dec.t):
        h, _, hs = class_number(f * f * dec.D)
        H += h
        Hs += hs
    return H, Hs


def class_data(D: int) -> ClassData:
    h, w, hs = class_number(D)
    H, Hs = hurwitz(D)
    return ClassData(D, h, w, hs, H, Hs)


def discriminants(dmin: int) -> list[int]:
    """Negative discriminants D with dmin <= D <= -3, descending."""
    return [D for D in range(-3, dmin - 1, -1) if D % 4 in (0, 1)]
