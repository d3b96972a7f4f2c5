"""Prime fields, their quadratic extensions, and the symbols built on them.

Every context fixes the smallest primitive root, so character indices derived
from the discrete-log tables are reproducible from run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

DEFAULT_PMAX = 500
DEFAULT_EXT_PMAX = 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def odd_primes(pmax: int, pmin: int = 3) -> list[int]:
    return [p for p in range(max(3, pmin), pmax + 1) if is_prime(p)]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n > 0`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _has_full_order(g: int, order: int, modpow) -> bool:
    return all(modpow(g, order // q) != 1 for q in prime_factors(order))


def _check_odd_prime(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)) or p == 2:
        raise ValueError(f"expected an odd prime, got {p!r}")


@dataclass(frozen=True)
class FieldCtx:
    """The field F_p with generator ``g`` and a complete discrete-log table.

    ``dlog[x]`` is the exponent of ``x`` base ``g``; ``dlog[0]`` is -1.
    ``powers[k]`` is ``g**k mod p`` for ``0 <= k < p - 1``.
    """

    p: int
    g: int
    dlog: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p - 1

    def reduce(self, x: int) -> int:
        return int(x) % self.p

    def minus_one(self) -> int:
        return self.p - 1

    def element(self, x: int) -> int:
        """Encode an integer residue as a field element (identity here)."""
        return int(x) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        return pow(int(x), -1, self.p)

    def additive_lift(self, x: int) -> int:
        # argument of the fixed additive character exp(2 pi i lift / p)
        return int(x)

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and other.p == self.p


def make_field(p: int) -> FieldCtx:
    _check_odd_prime(p)
    p = int(p)
    g = next(c for c in range(2, p) if _has_full_order(c, p - 1, lambda a, e: pow(a, e, p)))
    powers = np.empty(p - 1, dtype=np.int64)
    dlog = np.full(p, -1, dtype=np.int64)
    x = 1
    for k in range(p - 1):
        powers[k] = x
        dlog[x] = k
        x = x * g % p
    powers.setflags(write=False)
    dlog.setflags(write=False)
    return FieldCtx(p, g, dlog, powers)


def legendre(a: int, ctx: FieldCtx) -> int:
    a = int(a) % ctx.p
    if a == 0:
        return 0
    return 1 if ctx.dlog[a] % 2 == 0 else -1


def legendre_table(ctx: FieldCtx) -> np.ndarray:
    """phi(x) for every residue x, as an int8 array of length p."""
    out = np.where(ctx.dlog % 2 == 0, 1, -1).astype(np.int8)
    out[0] = 0
    return out


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for a positive integer n."""
    if n <= 0:
        raise ValueError("kronecker symbol needs a positive lower argument")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(D, n)


# ---------------------------------------------------------------------------
# Quadratic extension F_{p^2} = F_p[w], w^2 = u with u the smallest nonsquare.
# An element a + b*w is encoded as the integer a + b*p.


@dataclass(frozen=True)
class ExtFieldCtx:
    """F_{p^2} presented as F_p[x]/(x^2 - u).

    Elements are encoded as ``a + b*p`` for ``a + b*w``.  ``dlog`` and
    ``powers`` index the cyclic group of order ``p**2 - 1`` through ``gen``.
    """

    p: int
    u: int
    gen: int
    dlog: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p * self.p

    @property
    def order(self) -> int:
        return self.p * self.p - 1

    @property
    def modulus(self) -> tuple[int, int, int]:
        """Coefficients (1, 0, -u mod p) of the monic defining polynomial."""
        return (1, 0, (-self.u) % self.p)

    def element(self, x: int) -> int:
        return int(x) % self.p

    def minus_one(self) -> int:
        return self.p - 1

    def mul(self, x: int, y: int) -> int:
        return _ext_mul(x, y, self.p, self.u)

    def pow(self, x: int, e: int) -> int:
        return _ext_pow(x, e, self.p, self.u)

    def norm(self, x: int) -> int:
        a, b = x % self.p, x // self.p
        return (a * a - self.u * b * b) % self.p

    def trace(self, x: int) -> int:
        # (a + b w)^p = a - b w since w^(p-1) = u^((p-1)/2) = -1
        return 2 * (x % self.p) % self.p

    def additive_lift(self, x: int) -> int:
        return self.trace(x)

    def __hash__(self) -> int:
        return hash(("F2", self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtFieldCtx) and other.p == self.p


def _ext_mul(x: int, y: int, p: int, u: int) -> int:
    a, b = x % p, x // p
    c, d = y % p, y // p
    return (a * c + b * d * u) % p + ((a * d + b * c) % p) * p


def _ext_pow(x: int, e: int, p: int, u: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _ext_mul(result, x, p, u)
        x = _ext_mul(x, x, p, u)
        e >>= 1
    return result


def make_ext_field(p: int, bound: int = DEFAULT_EXT_PMAX) -> ExtFieldCtx:
    _check_odd_prime(p)
    p = int(p)
    if p > bound:
        raise ValueError(f"extension tables are O(p^2); p={p} exceeds bound {bound}")
    u = next(c for c in range(2, p) if pow(c, (p - 1) // 2, p) == p - 1)
    order = p * p - 1
    gen = next(
        c for c in range(2, p * p)
        if _has_full_order(c, order, lambda a, e: _ext_pow(a, e, p, u))
    )
    powers = np.empty(order, dtype=np.int64)
    dlog = np.full(p * p, -1, dtype=np.int64)
    x = 1
    for k in range(order):
        powers[k] = x
        dlog[x] = k
        x = _ext_mul(x, gen, p, u)
    if x != 1 or np.any(dlog[1:] < 0):
        raise AssertionError("generator sweep did not cover the multiplicative group")
    powers.setflags(write=False)
    dlog.setflags(write=False)
    return ExtFieldCtx(p, u, gen, dlog, powers)
