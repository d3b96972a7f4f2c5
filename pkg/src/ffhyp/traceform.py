"""Traces of T(p) on weight-3 cusp forms of level 16 and 32, character (-4/.).

Each trace is a constant plus a class-number-weighted sum over Frobenius
traces s with 0 < |s| < 2 sqrt(p) and s = p + 1 mod 16.  The weights come
from fixed tables indexed by ord2(t) - ord2(f) and the residue of the
fundamental discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .classno import class_number, fund_decompose
from .fieldcore import divisors, is_prime

# rows: a - b = 0, 1, 2, >= 3; columns: D even, D = 1 mod 8, D = 5 mod 8
C_TABLES = {
    "c1": ((0, 2, 0), (0, 6, 0), (6, 8, 4), (6, 6, 6)),
    "c2": ((0, 2, 0), (0, 6, 0), (4, 12, 0), (8, 8, 8)),
    "c3": ((0, -2, 0), (0, -6, 0), (-8, -4, -8), (-4, -4, -4)),
}
CONSTANTS = {"c1": -6, "c2": -8, "c3": 4}


@dataclass(frozen=True)
class CTable:
    which: str
    entries: tuple[tuple[int, int, int], ...]

    def lookup(self, a_minus_b: int, D: int) -> int:
        row = min(a_minus_b, 3)
        col = 0 if D % 2 == 0 else (1 if D % 8 == 1 else 2)
        return self.entries[row][col]


def ctable(which: str) -> CTable:
    return CTable(which, C_TABLES[which])


@dataclass(frozen=True)
class TraceTerm:
    s: int
    t: int
    D: int
    f: int
    a: int
    b: int


def ord2(n: int) -> int:
    n = abs(n)
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def admissible_s(p: int, modulus: int = 16) -> list[int]:
    """Signed s with 0 < |s| < 2 sqrt(p) and s = p + 1 mod ``modulus``."""
    bound = isqrt(4 * p)
    return [
        s for s in range(-bound, bound + 1)
        if s != 0 and s * s < 4 * p and (s - p - 1) % modulus == 0
    ]


def trace_terms(p: int) -> list[TraceTerm]:
    terms = []
    for s in admissible_s(p):
        dec = fund_decompose(s * s - 4 * p)
        a = ord2(dec.t)
        for f in divisors(dec.t):
            terms.append(TraceTerm(s, dec.t, dec.D, f, a, ord2(f)))
    return terms


def _check_p(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


@lru_cache(maxsize=None)
def _trace(p: int, which: str) -> int:
    _check_p(p)
    if p % 4 == 3:
        return 0
    table = ctable(which)
    total = Fraction(0)
    for term in trace_terms(p):
        hs = class_number((term.s * term.s - 4 * p) // (term.f * term.f))[2]
        total += term.s * hs * table.lookup(term.a - term.b, term.D)
    value = CONSTANTS[which] - total
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral trace {value} for {which} at p={p}")
    return int(value)


def trace16(p: int) -> int:
    return _trace(p, "c1")


def trace32(p: int) -> int:
    return _trace(p, "c2")


def trace32_new(p: int) -> int:
    return _trace(p, "c3")


@dataclass(frozen=True)
class Prop31Record:
    p: int
    s: int
    a: int
    D: int
    consistent: bool
    rule: str


def prop31_classify(p: int, s: int) -> Prop31Record:
    """Check the ord2(t) constraint for one s = p + 1 mod 8 with s^2 < 4p."""
    _check_p(p)
    if (s - p - 1) % 8:
        raise ValueError(f"s={s} is not congruent to p+1={p + 1} mod 8")
    if s * s >= 4 * p:
        raise ValueError(f"s^2 = {s * s} is not below 4p = {4 * p}")
    dec = fund_decompose(s * s - 4 * p)
    a = ord2(dec.t)
    odd = dec.D % 2 == 1
    if p % 8 == 1 and odd:
        rule, ok = "a>2", a > 2
    elif p % 8 == 5 and odd:
        rule, ok = "a=2", a == 2
    elif p % 8 == 5:
        rule, ok = "a<2", a < 2
    else:
        rule, ok = "none", True
    return Prop31Record(p, s, a, dec.D, ok, rule)


def prop31_cases(p: int) -> list[Prop31Record]:
    return [prop31_classify(p, s) for s in admissible_s(p, modulus=8)]
