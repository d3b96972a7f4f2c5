"""Normalized finite-field hypergeometric functions.

For characters A_0..A_n (upper) and B_1..B_n (lower) over F_q and x in F_q,

    F(x) = 1/(q-1) * sum_chi  prod_i g(A_i chi)/g(A_i)
                              * prod_j g(conj(B_j chi))/g(conj(B_j))
                              * g(conj(chi)) * chi(-1)^(n+1) * chi(x)

evaluated in double precision from a Gauss-sum table and rounded to the
nearest Gaussian integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chargauss import GaussTable, quadratic, quartic, tables
from .gaussint import GaussianInt

@dataclass(frozen=True)
class HyperSpec:
    upper: tuple[int, ...]
    lower: tuple[int, ...]
    x: int
    p: int
    ext: bool = False

    def __post_init__(self):
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError(
                f"need len(upper) == len(lower) + 1, got {len(self.upper)} and {len(self.lower)}"
            )


@dataclass(frozen=True)
class HyperValue:
    raw: complex
    rounded: GaussianInt
    residual: float

    @classmethod
    def from_raw(cls, raw: complex) -> "HyperValue":
        rounded = GaussianInt.nearest(raw)
        return cls(complex(raw), rounded, abs(raw - complex(rounded)))


def hyper_sum(upper: Sequence[int], lower: Sequence[int], x: int, gauss: GaussTable) -> complex:
    """Raw value of the character sum; ``x`` is an encoded field element."""
    ctx = gauss.ctx
    n = ctx.order
    G = gauss.values
    x = int(x)
    if x == 0:
        # chi(0) = 0 for every chi, trivial included
        return 0j
    k = np.arange(n)
    terms = G[(-k) % n].copy()
    for a in upper:
        terms *= G[(a + k) % n] / G[a % n]
    for b in lower:
        terms *= G[(-(b + k)) % n] / G[(-b) % n]
    # chi_k(-1) = (-1)^k since dlog(-1) = n/2
    if len(upper) % 2:
        terms *= np.where(k % 2 == 0, 1.0, -1.0)
    j = int(ctx.dlog[x])
    terms *= np.exp(2j * np.pi * ((k * j) % n) / n)
    return complex(terms.sum() / n)


def eval_hyper(spec: HyperSpec) -> HyperValue:
    ctx, gauss = tables(spec.p, spec.ext)
    return HyperValue.from_raw(hyper_sum(spec.upper, spec.lower, ctx.element(spec.x), gauss))


def evaluate(upper, lower, x: int, p: int, ext: bool = False) -> HyperValue:
    return eval_hyper(HyperSpec(tuple(upper), tuple(lower), x, p, ext))


# Thin wrappers for the specializations that keep recurring.

def four_f_three_phi(x: int, p: int, ext: bool = False) -> HyperValue:
    ctx, _ = tables(p, ext)
    phi = quadratic(ctx)
    return evaluate((phi,) * 4, (0,) * 3, x, p, ext)


def three_f_two_phi(p: int) -> HyperValue:
    ctx, _ = tables(p)
    phi = quadratic(ctx)
    return evaluate((phi,) * 3, (0, 0), 1, p)


def two_f_one_phi(x: int, p: int) -> HyperValue:
    ctx, _ = tables(p)
    phi = quadratic(ctx)
    return evaluate((phi, phi), (0,), x, p)


def three_f_two_quartic(p: int, conjugate: bool = False) -> HyperValue:
    ctx, _ = tables(p)
    phi = quadratic(ctx)
    return evaluate((quartic(ctx, conjugate), phi, phi), (0, 0), 1, p)


def two_f_one_gauss(p: int) -> complex:
    """-g(phi) g(chi4)/g(conj chi4) - g(phi) g(conj chi4)/g(chi4), for p = 1 mod 4."""
    if p % 4 != 1:
        raise ValueError(f"p={p} is 3 mod 4, so F_p has no character of order 4")
    ctx, G = tables(p)
    phi, c4, c4bar = quadratic(ctx), quartic(ctx), quartic(ctx, conjugate=True)
    return -G[phi] * G[c4] / G[c4bar] - G[phi] * G[c4bar] / G[c4]


# ---------------------------------------------------------------------------
# Well-poised 4F3 at -1 and its reduction to 3F2 values at 1.


def square_roots(a: int, order: int) -> list[int]:
    """Exponents r with 2r = a mod order, ascending (zero or two of them)."""
    if a % 2:
        return []
    r = (a % order) // 2
    return sorted({r, (r + order // 2) % order})


@dataclass(frozen=True)
class WhippleResult:
    lhs: complex
    rhs: complex | None
    branch: str  # "zero", "equality" or "not-applicable"

    @property
    def difference(self) -> float | None:
        return None if self.rhs is None else abs(self.lhs - self.rhs)


def whipple_check(a: int, b: int, c: int, d: int, p: int, ext: bool = False) -> WhippleResult:
    ctx, G = tables(p, ext)
    n = ctx.order
    a, b, c, d = (v % n for v in (a, b, c, d))
    minus_one = ctx.element(-1)
    lhs = hyper_sum((a, b, c, d), (a - b, a - c, a - d), minus_one, G)
    if a % 2:
        return WhippleResult(lhs, 0j, "zero")
    if a == 0 or b == 0 or (2 * b) % n == a or (c + d) % n == a:
        return WhippleResult(lhs, None, "not-applicable")
    factor = G[-a] * G[-a + c + d] / (G[-a + c] * G[-a + d])
    total = sum(hyper_sum((r - b, c, d), (r, a - b), 1, G) for r in square_roots(a, n))
    return WhippleResult(lhs, factor * total, "equality")


def legendre_2f1_sign(p: int) -> int:
    """Sign s with 2F1(phi, phi; eps | lambda)_p = s * a_p(lambda); equals phi(-1).

    Fixed by exhaustive comparison with Legendre-family point counts.
    """
    return 1 if p % 4 == 1 else -1
