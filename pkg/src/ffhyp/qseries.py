"""Eta-product q-expansions, the f2 coefficients, and the eigenvalue bridge.

Newforms used here:

    d(n): q prod (1-q^{2m})^4 (1-q^{4m})^4   weight 4, level 8
    c(n): q prod (1-q^{4m})^6                weight 3, level 16, (-4/.)
    a(n): q prod (1-q^{4m})^2 (1-q^{8m})^2   weight 2, level 32
    b(n): weight 3, level 32, (-4/.), Gaussian-integer coefficients.

b(p) for p = 1 mod 4 beyond the printed coefficients is half the new-space
trace at level 32; for p = 3 mod 4 beyond them it is unavailable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .fieldcore import is_prime, kronecker
from .gaussint import GaussianInt
from .traceform import trace32_new

D_FACTORS = ((2, 4), (4, 4))
C_FACTORS = ((4, 6),)
A_FACTORS = ((4, 2), (8, 2))

# q-expansion coefficients of f2 through q^17
B_FIXTURE = {
    1: GaussianInt(1), 2: GaussianInt(0), 3: GaussianInt(0, 4), 4: GaussianInt(0),
    5: GaussianInt(2), 6: GaussianInt(0), 7: GaussianInt(0, -8), 8: GaussianInt(0),
    9: GaussianInt(-7), 10: GaussianInt(0), 11: GaussianInt(0, -4), 12: GaussianInt(0),
    13: GaussianInt(-14), 14: GaussianInt(0), 15: GaussianInt(0, 8), 16: GaussianInt(0),
    17: GaussianInt(18),
}
B_FIXTURE_MAX = 17


class UnavailableError(LookupError):
    """A coefficient that cannot be recovered from the data at hand."""


@dataclass(frozen=True)
class QSeries:
    coeffs: tuple

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1


def eta_product(factors: Sequence[tuple[int, int]], N: int) -> QSeries:
    """q * prod_{m>=1} prod_(k, e) (1 - q^{k m})^e, coefficients of q^0..q^N."""
    if N < 1:
        raise ValueError("truncation N must be at least 1")
    # poly[i] is the coefficient of q^i in the product, before the leading q
    poly = [0] * N
    poly[0] = 1
    for k, e in factors:
        for j in range(k, N, k):
            for _ in range(e):
                for i in range(N - 1, j - 1, -1):
                    poly[i] -= poly[i - j]
    return QSeries(tuple([0] + poly))


@lru_cache(maxsize=None)
def _series(which: str, N: int) -> QSeries:
    factors = {"a": A_FACTORS, "c": C_FACTORS, "d": D_FACTORS}[which]
    return eta_product(factors, N)


def _coeff(which: str, n: int) -> int:
    # round the truncation up so nearby requests share one expansion
    N = max(64, 1 << (n.bit_length()))
    return _series(which, N)[n]


def a_coeff(n: int) -> int:
    return _coeff("a", n)


def c_coeff(n: int) -> int:
    return _coeff("c", n)


def d_coeff(n: int) -> int:
    return _coeff("d", n)


def b_coeff(n: int) -> GaussianInt:
    if n in B_FIXTURE:
        return B_FIXTURE[n]
    if is_prime(n) and n % 4 == 1:
        tr = trace32_new(n)
        if tr % 2:
            raise ArithmeticError(f"odd new-space trace {tr} at p={n}")
        return GaussianInt(tr // 2)
    raise UnavailableError(
        f"b({n}) is not available: beyond q^{B_FIXTURE_MAX} only primes 1 mod 4 are recoverable"
    )


def xi(p: int) -> int:
    """(2/p): +1 for p = 1, 7 mod 8, -1 for p = 3, 5 mod 8."""
    return 1 if p % 8 in (1, 7) else -1


def psi(p: int) -> int:
    return kronecker(-4, p)


@dataclass(frozen=True)
class EigenvalueBridge:
    p: int
    a_p: GaussianInt
    b_p: GaussianInt
    xi_p: int
    lambda_p: int
    a_p2: int


def lambda_p(p: int) -> int:
    if p % 4 == 3:
        return 0
    ab = int(a_coeff(p) * b_coeff(p))
    return ab if p % 8 == 1 else -ab


def a_p2(p: int) -> int:
    """p b(p)^2 + psi(p) p^2 a(p)^2 - 2 psi(p) p^3, always a rational integer."""
    a, b, s = a_coeff(p), b_coeff(p), psi(p)
    value = b * b * p + s * p * p * a * a - 2 * s * p ** 3
    if not value.is_real:
        raise ArithmeticError(f"non-real a_p2 {value} at p={p}")
    return int(value)


def bridge(p: int) -> EigenvalueBridge:
    return EigenvalueBridge(p, GaussianInt(a_coeff(p)), b_coeff(p), xi(p), lambda_p(p), a_p2(p))


@dataclass(frozen=True)
class ConjectureRecord:
    p: int
    lhs: int
    rhs: complex
    residual: float


def conjecture6_check(p: int) -> ConjectureRecord:
    """lambda(p)^2 - 2 a_p2(p) against 4F3(phi^4; eps^3 | -1) over F_{p^2}."""
    from .hyper import four_f_three_phi

    if p > B_FIXTURE_MAX and p % 4 == 3:
        raise UnavailableError(f"b({p}) is unavailable, so the p={p} check cannot run")
    lhs = lambda_p(p) ** 2 - 2 * a_p2(p)
    value = four_f_three_phi(p - 1, p, ext=True)
    return ConjectureRecord(p, lhs, value.raw, value.residual)
