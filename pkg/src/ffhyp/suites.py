"""Verification suites: each one sweeps primes and compares two independent routes.

A suite check takes ``(p, cfg)`` and returns records.  Records compare a
left-hand side (usually a character-sum value) to a right-hand side computed
without floating point.  ``run_suite`` fans primes out to worker processes
and reassembles records in ascending order of p.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import classno, curves, hyper, qseries, traceform
from .chargauss import tables
from .fieldcore import legendre, make_field, odd_primes
from .gaussint import GaussianInt


@dataclass
class RunConfig:
    pmax: int = 200
    ext_pmax: int = 17
    tol: float = 1e-6
    jobs: int = 1
    format: str = "json"
    census_pmax: int = 100
    whipple_pmax: int = 50
    whipple_samples: int = 50
    seed: int = 0

    def __post_init__(self):
        if self.pmax < 3:
            raise ValueError("pmax must be at least 3")
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.format not in ("json", "csv", "text"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class Record:
    p: int | None
    key: str
    lhs: object
    rhs: object
    residual: float = 0.0
    passed: bool | None = None
    status: str = "checked"

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "key": self.key,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "residual": float(self.residual),
            "pass": self.passed,
            "status": self.status,
        }


@dataclass
class SuiteReport:
    suite: str
    records: list[Record] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def checked(self) -> int:
        return sum(r.status == "checked" for r in self.records)

    @property
    def passed(self) -> int:
        return sum(r.passed is True for r in self.records)

    @property
    def failed(self) -> int:
        return sum(r.passed is False for r in self.records)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.checked > 0

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.records if r.status == "checked"), default=0.0)

    def summary(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "unavailable": sum(r.status == "unavailable" for r in self.records),
            "max_residual": self.max_residual,
            "ok": self.ok,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _jsonable(v):
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, GaussianInt):
        return v.re if v.is_real else str(v)
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, complex):
        return v.real if v.imag == 0 else [v.real, v.imag]
    if isinstance(v, (float, np.floating)):
        return float(v)
    return str(v)


def compare(p, key, value: hyper.HyperValue, expected, tol: float) -> Record:
    """Record for a rounded character-sum value against an exact integer."""
    expected = GaussianInt.coerce(expected)
    ok = value.rounded == expected and value.residual < tol
    return Record(p, key, value.rounded, expected, value.residual, bool(ok))


def exact(p, key, lhs, rhs) -> Record:
    return Record(p, key, lhs, rhs, 0.0, bool(lhs == rhs))


def close(p, key, lhs: complex, rhs: complex, tol: float) -> Record:
    diff = abs(lhs - rhs)
    ok = GaussianInt.nearest(lhs) == GaussianInt.nearest(rhs) and diff < tol
    return Record(p, key, complex(lhs), complex(rhs), diff, bool(ok))


# ---------------------------------------------------------------------------
# Per-prime checks.


def check_4f3_at_one(p, cfg):
    return [compare(p, "", hyper.four_f_three_phi(1, p), qseries.d_coeff(p) + p, cfg.tol)]


def check_3f2_level16(p, cfg):
    return [compare(p, "", hyper.three_f_two_phi(p), qseries.c_coeff(p), cfg.tol)]


def check_siegel_eigenvalue(p, cfg):
    expected = qseries.xi(p) * qseries.lambda_p(p)
    return [compare(p, "", hyper.four_f_three_phi(p - 1, p), expected, cfg.tol)]


def check_2f1_level32(p, cfg):
    return [compare(p, "", hyper.two_f_one_phi(p - 1, p), qseries.a_coeff(p), cfg.tol)]


def check_3f2_quartic(p, cfg):
    if p % 4 != 1:
        return []
    b = qseries.b_coeff(p)
    return [
        compare(p, "chi4", hyper.three_f_two_quartic(p), b, cfg.tol),
        compare(p, "chi4bar", hyper.three_f_two_quartic(p, conjugate=True), b, cfg.tol),
    ]


def check_factorization(p, cfg):
    if p % 4 != 1:
        return []
    four = hyper.four_f_three_phi(p - 1, p).raw
    two = hyper.two_f_one_phi(p - 1, p).raw
    three = hyper.three_f_two_quartic(p).raw
    return [
        close(p, "4F3=2F1*3F2", four, two * three, cfg.tol),
        close(p, "2F1=gauss", two, hyper.two_f_one_gauss(p), cfg.tol),
    ]


def check_census(p, cfg):
    if p < 5 or p > cfg.census_pmax:
        return []
    out = []
    for s, n in curves.admissible_census_pairs(p):
        entry = curves.census(s, n, p)
        out.append(exact(p, f"s={s},n={n}", entry.count, curves.schoof_count(s, n, p)))
    return out


def check_prop31(p, cfg):
    return [
        Record(p, f"s={r.s}", f"a={r.a},D={r.D}", r.rule, 0.0, r.consistent)
        for r in traceform.prop31_cases(p)
    ]


def check_trace16(p, cfg):
    return [exact(p, "", traceform.trace16(p), qseries.c_coeff(p))]


def check_trace_consistency(p, cfg):
    new, t32, t16 = traceform.trace32_new(p), traceform.trace32(p), traceform.trace16(p)
    out = [exact(p, "new=32-2*16", new, t32 - 2 * t16)]
    if p % 4 == 3:
        out.append(exact(p, "vanish", (t16, t32, new), (0, 0, 0)))
    elif p <= qseries.B_FIXTURE_MAX:
        out.append(exact(p, "new=2b", new, 2 * int(qseries.B_FIXTURE[p])))
    else:
        value = hyper.three_f_two_quartic(p)
        out.append(Record(p, "new=2*3F2", new, 2 * value.rounded, 2 * value.residual,
                          bool(new == 2 * value.rounded and 2 * value.residual < cfg.tol)))
    return out


def check_twist_ladder(p, cfg):
    if p < 5:
        return []
    ctx = make_field(p)
    phi = lambda v: legendre(v, ctx)
    inv = lambda v: pow(v, -1, p)
    ap = curves.legendre_traces(p)
    bad = 0
    for l in range(2, p):
        chain = (
            int(ap[l]),
            phi(l) * int(ap[inv(l)]),
            phi(-1) * int(ap[(1 - l) % p]),
            phi(1 - l) * int(ap[l * inv(l - 1) % p]),
            phi(l - 1) * int(ap[inv((1 - l) % p)]),
            phi(-l) * int(ap[(l - 1) * inv(l) % p]),
        )
        bad += len(set(chain)) != 1
    return [exact(p, "violations", bad, 0)]


def check_torsion_lemma(p, cfg):
    if p < 5 or p > cfg.census_pmax:
        return []
    ctx = make_field(p)
    phi = lambda v: legendre(v, ctx)
    qualifying = [
        l for l in range(2, p)
        if phi(-1) == 1 and int(ctx.dlog[l]) % 4 == 0 and phi(l - 1) == -1
    ]
    forward_bad = 0
    for l in qualifying:
        st = curves.group_structure(p, *curves.LegendreCurve(l, p).coefficients())
        forward_bad += not (curves.contains(st, 2, 8) and not curves.contains(st, 4, 4))
    out = [exact(p, "forward", forward_bad, 0)]
    if p % 4 == 1:
        legendre_classes = {
            curves.iso_class(p, *curves.LegendreCurve(l, p).coefficients()) for l in qualifying
        }
        converse_bad = sum(
            1 for label, (_, st) in curves.class_table(p).items()
            if curves.contains(st, 2, 8) and not curves.contains(st, 4, 4)
            and label not in legendre_classes
        )
        out.append(exact(p, "converse", converse_bad, 0))
    return out


def check_square_sum(p, cfg):
    phi_m1 = 1 if p % 4 == 1 else -1
    return [exact(p, "", curves.lemma_family_sums(p)["square_sum"], -(1 + phi_m1))]


def check_quartic_twist_sums(p, cfg):
    if p % 4 != 1:
        return []
    sums = curves.lemma_family_sums(p)
    return [
        exact(p, "nonsquare", GaussianInt.coerce(sums["mixed_nonsq"]), 0),
        exact(p, "square", GaussianInt.coerce(sums["mixed_sq"]),
              GaussianInt.coerce(sums["square_twist"])),
    ]


def check_isogeny_sums(p, cfg):
    if p % 4 != 1:
        return []
    sums = curves.lemma_family_sums(p)
    ctx = make_field(p)
    phi = lambda v: legendre(v, ctx)
    ap = curves.legendre_traces(p)
    bad = 0
    for l in range(2, p):
        if phi(l) != 1:
            continue
        psi = curves.isogeny_partner(l, p)
        bad += bool(psi in (0, 1) or ap[psi] != ap[l])
        if int(ctx.dlog[l]) % 4 == 0 and phi(l - 1) == -1:
            bad += not (phi(psi) == 1 and int(ctx.dlog[psi]) % 4 == 2 and phi(psi - 1) == 1)
    return [
        exact(p, "sums", sums["s_lambda"], sums["s_psi"]),
        exact(p, "partner", bad, 0),
    ]


def _whipple_samples(p, cfg):
    ctx, _ = tables(p)
    n = ctx.order
    rng = np.random.default_rng([cfg.seed, p])
    zero, equal = [], []
    while len(zero) < cfg.whipple_samples:
        a, b, c, d = (int(v) for v in rng.integers(0, n, 4))
        if a % 2:
            zero.append((a, b, c, d))
    # square characters other than eps; none exist at p = 3
    evens = list(range(2, n, 2))
    attempts = 0
    while evens and len(equal) < cfg.whipple_samples and attempts < 100 * cfg.whipple_samples:
        attempts += 1
        a = int(rng.choice(evens))
        b, c, d = (int(v) for v in rng.integers(0, n, 3))
        if b != 0 and (2 * b) % n != a and (c + d) % n != a:
            equal.append((a, b, c, d))
    return zero, equal


def check_whipple(p, cfg):
    if p > cfg.whipple_pmax:
        return []
    zero, equal = _whipple_samples(p, cfg)
    out = []
    worst = max(abs(hyper.whipple_check(*t, p).lhs) for t in zero)
    out.append(Record(p, f"zero[{len(zero)}]", worst, 0, worst, bool(worst < cfg.tol)))
    if equal:
        worst = 0.0
        for t in equal:
            res = hyper.whipple_check(*t, p)
            worst = max(worst, res.difference)
        out.append(Record(p, f"equality[{len(equal)}]", worst, 0, worst, bool(worst < cfg.tol)))
    return out


def check_conjecture(p, cfg):
    try:
        rec = qseries.conjecture6_check(p)
    except qseries.UnavailableError:
        return [Record(p, "", None, None, 0.0, None, "unavailable")]
    ok = bool(GaussianInt.nearest(rec.rhs) == rec.lhs and rec.residual < max(cfg.tol, 1e-5))
    return [Record(p, "", GaussianInt.nearest(rec.rhs), rec.lhs, rec.residual, ok)]


def run_class_number_sweep(cfg) -> list[Record]:
    """hstar_by_conductor against enumeration for 200 seeded (D_fund, f) pairs."""
    fundamentals = [D for D in range(-3, -201, -1) if classno.is_fundamental(D)]
    rng = np.random.default_rng(cfg.seed)
    out = []
    for _ in range(200):
        D = int(rng.choice(fundamentals))
        f = int(rng.integers(1, 13))
        lhs = classno.hstar_by_conductor(D, f)
        rhs = classno.class_number(f * f * D)[2]
        out.append(exact(None, f"D={D},f={f}", lhs, rhs))
    for D, H, Hs in ((-16, 2, Fraction(3, 2)), (-4, 1, Fraction(1, 2))):
        out.append(exact(None, f"H({D})", classno.hurwitz(D), (Fraction(H), Hs)))
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    description: str
    check: Callable | None = None
    sweep: Callable | None = None
    ext: bool = False


SUITES: dict[str, Suite] = {
    "thm1.1": Suite("4F3(phi^4; eps^3 | 1) = d(p) + p, level-8 weight-4 eta product",
                    check_4f3_at_one),
    "thm1.2": Suite("3F2(phi^3; eps^2 | 1) = c(p), level-16 weight-3 eta product",
                    check_3f2_level16),
    "thm1.3": Suite("4F3(phi^4; eps^3 | -1) = xi(p) lambda(p), all-integer eigenvalue",
                    check_siegel_eigenvalue),
    "thm1.5": Suite("2F1(phi, phi; eps | -1) = a(p), level-32 weight-2 eta product",
                    check_2f1_level32),
    "thm1.6": Suite("3F2(chi4, phi, phi; eps, eps | 1) = b(p) for both order-4 characters",
                    check_3f2_quartic),
    "eq1.4": Suite("4F3 at -1 factors as 2F1 * 3F2; 2F1 matches its Gauss-sum closed form",
                   check_factorization),
    "thm2.2": Suite("isomorphism-class census equals H((s^2-4p)/n^2)", check_census),
    "lem2.1": Suite("conductor formula for h* against reduced-form enumeration",
                    sweep=run_class_number_sweep),
    "prop3.1": Suite("ord2(t) trichotomy for s = p+1 mod 8", check_prop31),
    "thm3.2-dim1": Suite("level-16 trace formula equals c(p)", check_trace16),
    "cor3.4-consistency": Suite("new-space trace = Tr32 - 2 Tr16 = 2 b(p); traces vanish at 3 mod 4",
                                check_trace_consistency),
    "prop4.3": Suite("Legendre-family twist ladder across the six j-orbit members",
                     check_twist_ladder),
    "lem4.4": Suite("Z/2 x Z/8 but not Z/4 x Z/4 characterizes fourth-power lambda",
                    check_torsion_lemma),
    "lem4.5": Suite("sum of a_p over square lambda = -(1 + phi(-1))", check_square_sum),
    "lem4.6": Suite("quartic-twisted sums over the family", check_quartic_twist_sums),
    "lem4.7": Suite("2-isogeny partner preserves a_p and transports the restricted sums",
                    check_isogeny_sums),
    "thm5.2": Suite("well-poised 4F3 at -1: zero branch and 3F2 reduction", check_whipple),
    "conj6": Suite("lambda(p)^2 - 2 a_p2 = 4F3(phi^4; eps^3 | -1) over F_{p^2}",
                   check_conjecture, ext=True),
}


def _primes_for(suite: Suite, cfg: RunConfig) -> list[int]:
    if suite.ext:
        return odd_primes(max(cfg.ext_pmax, 3))
    return odd_primes(cfg.pmax)


def _run_one(suite_id: str, p: int, cfg: RunConfig) -> list[Record]:
    return SUITES[suite_id].check(p, cfg)


def run_suite(suite_id: str, cfg: RunConfig | None = None) -> SuiteReport:
    cfg = cfg or RunConfig()
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; valid ids: {', '.join(SUITES)}")
    suite = SUITES[suite_id]
    start = time.perf_counter()
    report = SuiteReport(suite_id)
    if suite.sweep is not None:
        report.records = suite.sweep(cfg)
    else:
        primes = _primes_for(suite, cfg)
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as pool:
                chunks = pool.map(_run_one, [suite_id] * len(primes), primes, [cfg] * len(primes))
                records = [r for chunk in chunks for r in chunk]
        else:
            records = [r for p in primes for r in suite.check(p, cfg)]
        report.records = records
    report.wall_time = time.perf_counter() - start
    return report
