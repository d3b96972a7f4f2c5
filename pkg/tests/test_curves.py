import pytest

from ffhyp import curves
from ffhyp.classno import hurwitz
from ffhyp.fieldcore import legendre, make_field, odd_primes

from oracles import count_points, group_invariants

PRIMES = odd_primes(100, pmin=5)


def _ap_oracle(lam, p):
    return p + 1 - count_points(p, -1 - lam, lam, 0)


def test_ap_examples():
    assert curves.ap_lambda(2, 5) == -2 == _ap_oracle(2, 5)
    assert curves.ap_lambda(4, 5) == -2 == _ap_oracle(4, 5)
    ctx = make_field(5)
    squares = [l for l in range(2, 5) if legendre(l, ctx) == 1]
    assert sum(curves.ap_lambda(l, 5) for l in squares) == -2


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 23, 31])
def test_ap_matches_point_count(p):
    for lam in range(2, p):
        a = curves.ap_lambda(lam, p)
        assert a == _ap_oracle(lam, p)
        assert a * a <= 4 * p


@pytest.mark.parametrize("lam", [0, 1, 5, 6])
def test_singular_lambda_rejected(lam):
    with pytest.raises(ValueError):
        curves.ap_lambda(lam, 5)
    with pytest.raises(ValueError):
        curves.LegendreCurve(lam, 5)


def test_twist_examples():
    assert curves.twist_trace(2, 2, 5) == 2
    assert curves.twist_trace(2, 4, 5) == curves.ap_lambda(2, 5)
    with pytest.raises(ValueError):
        curves.twist_trace(2, 0, 5)


@pytest.mark.parametrize("p", odd_primes(60, pmin=5))
def test_twist_relation(p):
    ctx = make_field(p)
    for lam in range(2, p):
        for t in range(1, p):
            assert curves.ap_lambda(lam, p) == legendre(t, ctx) * curves.twist_trace(lam, t, p)
        # the -1 twist of E_{1-lambda}
        assert curves.twist_trace((1 - lam) % p, -1, p) == curves.ap_lambda(lam, p)


def test_j_orbit_examples():
    assert curves.j_orbit(2, 13) == {2, 12, 7}
    assert curves.j_invariant(2, 13) == 1728 % 13
    orbit = curves.j_orbit(3, 13)
    assert len(orbit) == 6
    assert len({curves.j_invariant(l, 13) for l in orbit}) == 1
    # j = 0 at roots of l^2 - l + 1 (p = 7: l = 3, 5)
    assert [l for l in range(2, 7) if curves.j_invariant(l, 7) == 0] == [3, 5]


@pytest.mark.parametrize("p", odd_primes(60, pmin=5))
def test_j_is_six_to_one_generically(p):
    for lam in range(2, p):
        orbit = curves.j_orbit(lam, p)
        j = curves.j_invariant(lam, p)
        fibre = {l for l in range(2, p) if curves.j_invariant(l, p) == j}
        assert orbit == fibre
        if j not in (0, 1728 % p):
            assert len(orbit) == 6


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_group_structure_matches_oracle(p):
    for lam in range(2, p):
        coeffs = curves.LegendreCurve(lam, p).coefficients()
        st = curves.group_structure(p, *coeffs)
        assert st == group_invariants(p, *coeffs)
        assert st[0] % 2 == 0
        assert st[0] * st[1] == p + 1 - curves.ap_lambda(lam, p)
    for A in range(p):
        for B in range(0, p, 3):
            if (4 * A ** 3 + 27 * B * B) % p:
                assert curves.group_structure(p, 0, A, B) == group_invariants(p, 0, A, B)


def test_group_structure_rejects_singular():
    with pytest.raises(ValueError):
        curves.group_structure(7, 0, 0, 0)


def test_lemma_torsion_example():
    # p = 17: fourth powers l with l - 1 a nonsquare
    p = 17
    ctx = make_field(p)
    qualifying = [l for l in range(2, p)
                  if ctx.dlog[l] % 4 == 0 and legendre(l - 1, ctx) == -1]
    assert qualifying
    for lam in qualifying:
        coeffs = curves.LegendreCurve(lam, p).coefficients()
        st = curves.group_structure(p, *coeffs)
        assert st == group_invariants(p, *coeffs)
        assert curves.contains(st, 2, 8) and not curves.contains(st, 4, 4)


def test_census_examples():
    assert curves.census(2, 1, 5).count == 2 == hurwitz(-16)[0]
    assert curves.census(2, 2, 5).count == 1 == hurwitz(-4)[0]
    with pytest.raises(ValueError, match="p does not divide s"):
        curves.census(5, 1, 5)
    with pytest.raises(ValueError, match="s\\^2"):
        curves.census(7, 1, 5)


@pytest.mark.parametrize("p", PRIMES)
def test_schoof_census(p):
    for s, n in curves.admissible_census_pairs(p):
        assert curves.census(s, n, p).count == curves.schoof_count(s, n, p)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_class_table_covers_all_curves(p):
    # orbit sizes (p-1)/|stab| must add back up to the number of nonsingular pairs
    labels = curves.weierstrass_classes(p)
    nonsingular = sum(1 for A in range(p) for B in range(p) if (4 * A ** 3 + 27 * B * B) % p)
    assert (labels >= 0).sum() == nonsingular
    for A in range(p):
        for B in range(p):
            if labels[A * p + B] >= 0:
                a, b = divmod(int(labels[A * p + B]), p)
                assert any(pow(u, 4, p) * a % p == A and pow(u, 6, p) * b % p == B
                           for u in range(1, p))


def test_isogeny_partner_examples():
    p = 13
    ctx = make_field(p)
    for lam in range(2, p):
        if legendre(lam, ctx) == 1:
            psi = curves.isogeny_partner(lam, p)
            assert curves.ap_lambda(psi, p) == curves.ap_lambda(lam, p)
    p = 17
    ctx = make_field(p)
    for lam in range(2, p):
        if ctx.dlog[lam] % 4 == 0 and legendre(lam - 1, ctx) == -1:
            psi = curves.isogeny_partner(lam, p)
            assert legendre(psi, ctx) == 1 and ctx.dlog[psi] % 4 == 2
            assert legendre(psi - 1, ctx) == 1
    with pytest.raises(ValueError):
        curves.isogeny_partner(2, 7)


@pytest.mark.parametrize("p", odd_primes(100))
def test_family_lemmas(p):
    sums = curves.lemma_family_sums(p)
    assert sums["square_sum"] == -(1 + (1 if p % 4 == 1 else -1))
    if p % 4 == 1:
        assert sums["mixed_nonsq"] == 0
        assert sums["mixed_sq"] == sums["square_twist"]
        assert sums["s_lambda"] == sums["s_psi"]
        assert sums["full_twist"] == 2 + 4 * sums["s_lambda"]


def test_lemma_47_at_13():
    sums = curves.lemma_family_sums(13)
    ctx = make_field(13)
    brute_l = sum(_ap_oracle(l, 13) for l in range(2, 13)
                  if ctx.dlog[l] % 4 == 0 and legendre(l - 1, ctx) == -1)
    brute_p = sum(_ap_oracle(l, 13) for l in range(2, 13)
                  if legendre(l, ctx) == 1 and ctx.dlog[l] % 4 == 2 and legendre(l - 1, ctx) == 1)
    assert sums["s_lambda"] == brute_l == brute_p
