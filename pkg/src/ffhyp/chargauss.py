"""Multiplicative characters and Gauss sums over F_p and F_{p^2}.

A character is identified by its exponent ``k`` modulo ``q - 1``:
chi_k(g**j) = exp(2 pi i k j / (q - 1)) against the context's generator.
The additive character is theta(x) = exp(2 pi i lift(x) / p), where lift is
the identity on F_p and the trace map on F_{p^2}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .fieldcore import ExtFieldCtx, FieldCtx, make_ext_field, make_field

Ctx = FieldCtx | ExtFieldCtx


def trivial(ctx: Ctx) -> int:
    return 0


def quadratic(ctx: Ctx) -> int:
    return ctx.order // 2


def quartic(ctx: Ctx, conjugate: bool = False) -> int:
    """Exponent of the order-4 character; raises when 4 does not divide q - 1."""
    if ctx.order % 4:
        raise ValueError(f"no character of order 4: q - 1 = {ctx.order} is not divisible by 4")
    k = ctx.order // 4
    return ctx.order - k if conjugate else k


def char_eval(k: int, x: int, ctx: Ctx) -> complex:
    x = ctx.element(x) if isinstance(ctx, FieldCtx) else int(x)
    if x == 0:
        return 0j
    j = int(ctx.dlog[x])
    return complex(np.exp(2j * np.pi * ((k * j) % ctx.order) / ctx.order))


def char_order(k: int, ctx: Ctx) -> int:
    from math import gcd

    return ctx.order // gcd(k % ctx.order, ctx.order)


def is_square_char(k: int, ctx: Ctx) -> bool:
    return k % 2 == 0


def additive_values(ctx: Ctx) -> np.ndarray:
    """theta(g**j) for j = 0 .. q-2."""
    lifts = np.array([ctx.additive_lift(int(x)) for x in ctx.powers], dtype=np.float64)
    return np.exp(2j * np.pi * lifts / ctx.p)


@dataclass(frozen=True)
class GaussTable:
    """All q - 1 Gauss sums; ``values[k] = g(chi_k)``."""

    ctx: Ctx
    values: np.ndarray = field(repr=False)

    def __getitem__(self, k: int) -> complex:
        return complex(self.values[k % self.ctx.order])


def gauss_table_naive(ctx: Ctx) -> GaussTable:
    """Direct double loop; quadratic in q.  Reference route for tests."""
    n = ctx.order
    theta = additive_values(ctx)
    vals = np.empty(n, dtype=np.complex128)
    j = np.arange(n)
    for k in range(n):
        vals[k] = np.sum(np.exp(2j * np.pi * ((k * j) % n) / n) * theta)
    vals.setflags(write=False)
    return GaussTable(ctx, vals)


def gauss_table(ctx: Ctx) -> GaussTable:
    # g(chi_k) = sum_j exp(2 pi i k j / n) theta(g^j) is an inverse DFT
    n = ctx.order
    vals = n * np.fft.ifft(additive_values(ctx))
    vals.setflags(write=False)
    return GaussTable(ctx, vals)


@lru_cache(maxsize=None)
def tables(p: int, ext: bool = False) -> tuple[Ctx, GaussTable]:
    """Cached (context, Gauss table) for F_p, or F_{p^2} when ``ext``."""
    ctx = make_ext_field(p) if ext else make_field(p)
    return ctx, gauss_table(ctx)
