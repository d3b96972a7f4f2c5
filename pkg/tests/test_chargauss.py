import cmath

import numpy as np
import pytest

from ffhyp.chargauss import (
    char_eval, gauss_table, gauss_table_naive, quadratic, quartic, tables,
)
from ffhyp.fieldcore import legendre, make_ext_field, make_field, odd_primes

SMALL = odd_primes(50)


def test_char_eval_examples():
    ctx7 = make_field(7)
    assert char_eval(0, 3, ctx7) == 1
    for p in (3, 7, 13):
        assert char_eval(0, 0, make_field(p)) == 0
    ctx13 = make_field(13)
    for x in range(13):
        assert abs(char_eval(6, x, ctx13) - legendre(x, ctx13)) < 1e-12


@pytest.mark.parametrize("p", SMALL)
def test_multiplicativity(p):
    ctx = make_field(p)
    n = p - 1
    for j in range(n):
        for k in range(0, n, 3):
            for x in range(1, p):
                lhs = char_eval(j, x, ctx) * char_eval(k, x, ctx)
                assert abs(lhs - char_eval((j + k) % n, x, ctx)) < 1e-9


@pytest.mark.parametrize("p", SMALL)
def test_orthogonality(p):
    ctx = make_field(p)
    for k in range(p - 1):
        total = sum(char_eval(k, x, ctx) for x in range(1, p))
        assert abs(total - (p - 1 if k == 0 else 0)) < 1e-9


@pytest.mark.parametrize("p", SMALL)
def test_gauss_invariants(p):
    ctx = make_field(p)
    G = gauss_table(ctx)
    assert abs(G[0] + 1) < 1e-9
    for k in range(1, p - 1):
        assert abs(abs(G[k]) ** 2 - p) < 1e-9
        chi_m1 = char_eval(k, p - 1, ctx)
        assert abs(G[k] * G[-k] - chi_m1 * p) < 1e-9
        assert abs(G[-k] - chi_m1 * G[k].conjugate()) < 1e-9


@pytest.mark.parametrize("p", SMALL)
def test_fft_matches_naive(p):
    ctx = make_field(p)
    assert np.max(np.abs(gauss_table(ctx).values - gauss_table_naive(ctx).values)) < 1e-9


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fft_matches_naive_extension(p):
    F = make_ext_field(p)
    fast, slow = gauss_table(F).values, gauss_table_naive(F).values
    assert np.max(np.abs(fast - slow)) < 1e-9
    assert np.allclose(np.abs(fast[1:]) ** 2, p * p)


def test_gauss_examples():
    assert abs(gauss_table(make_field(7))[0] + 1) < 1e-12
    ctx11 = make_field(11)
    assert abs(abs(gauss_table(ctx11)[quadratic(ctx11)]) ** 2 - 11) < 1e-9
    # direct 4-term sum at p = 5: squares {1, 4} minus nonsquares {2, 3}
    z = cmath.exp(2j * cmath.pi / 5)
    direct = z + z ** 4 - z ** 2 - z ** 3
    ctx5 = make_field(5)
    assert abs(gauss_table(ctx5)[quadratic(ctx5)] - direct) < 1e-12
    assert abs(direct - 5 ** 0.5) < 1e-12


def test_quartic_character():
    ctx = make_field(13)
    k = quartic(ctx)
    assert k == 3 and quartic(ctx, conjugate=True) == 9
    assert abs(char_eval(k, ctx.g, ctx) - 1j) < 1e-12
    with pytest.raises(ValueError):
        quartic(make_field(7))


def test_tables_cached():
    assert tables(13) is tables(13)
    assert tables(5, True)[0].q == 25
