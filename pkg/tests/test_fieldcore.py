import pytest
from hypothesis import given, strategies as st

from ffhyp.fieldcore import (
    is_prime, jacobi, kronecker, legendre, make_ext_field, make_field, odd_primes,
)

from oracles import order_mod

PRIMES = odd_primes(500)


@pytest.mark.parametrize("p, g", [(3, 2), (5, 2), (7, 3), (11, 2), (23, 5), (41, 6)])
def test_smallest_primitive_root(p, g):
    assert make_field(p).g == g
    # exhaustive: every smaller candidate has smaller order
    assert order_mod(g, p) == p - 1
    assert all(order_mod(c, p) < p - 1 for c in range(2, g))


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 91, -7])
def test_make_field_rejects(bad):
    with pytest.raises(ValueError):
        make_field(bad)


@pytest.mark.parametrize("p", odd_primes(100))
def test_dlog_is_bijection(p):
    ctx = make_field(p)
    assert sorted(ctx.dlog[1:]) == list(range(p - 1))
    for k in range(p - 1):
        assert ctx.dlog[pow(ctx.g, k, p)] == k


def test_legendre_examples():
    ctx7 = make_field(7)
    assert legendre(0, ctx7) == 0
    assert legendre(2, ctx7) == 1
    for p in (3, 5, 101):
        assert legendre(1, make_field(p)) == 1


@pytest.mark.parametrize("p", PRIMES)
def test_euler_criterion(p):
    ctx = make_field(p)
    for a in range(p):
        e = pow(a, (p - 1) // 2, p)
        assert legendre(a, ctx) == (e if e <= 1 else -1)


@pytest.mark.parametrize("p", odd_primes(60))
def test_legendre_multiplicative(p):
    ctx = make_field(p)
    for a in range(p):
        for b in range(p):
            assert legendre(a, ctx) * legendre(b, ctx) == legendre(a * b, ctx)


def test_kronecker_examples():
    assert kronecker(-3, 2) == -1
    assert kronecker(-4, 3) == -1
    assert kronecker(-4, 3) == legendre(-4 % 3, make_field(3))
    for D in (-3, -4, -7, 5, 12):
        assert kronecker(D, 1) == 1
    assert kronecker(-4, 2) == 0
    assert kronecker(-7, 2) == 1  # -7 = 1 mod 8


def _kronecker_oracle(D, n):
    # multiplicative in n over its prime factorization
    out = 1
    m = n
    q = 2
    while m > 1:
        while m % q == 0:
            m //= q
            if q == 2:
                out *= 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
            else:
                r = D % q
                out *= 0 if r == 0 else (1 if any(y * y % q == r for y in range(q)) else -1)
        q += 1
    return out


@given(st.integers(-400, 400), st.integers(1, 300))
def test_kronecker_matches_factorization(D, n):
    assert kronecker(D, n) == _kronecker_oracle(D, n)


@given(st.integers(-1000, 1000), st.sampled_from(odd_primes(200)))
def test_jacobi_prime_is_legendre(a, p):
    assert jacobi(a, p) == legendre(a, make_field(p))


def test_ext_field_moduli():
    F3 = make_ext_field(3)
    assert F3.u == 2 and F3.modulus == (1, 0, 1)  # x^2 + 1
    F5 = make_ext_field(5)
    assert F5.u == 2 and F5.modulus == (1, 0, 3)  # x^2 - 2


def test_ext_field_bound():
    with pytest.raises(ValueError):
        make_ext_field(37)
    assert make_ext_field(37, bound=40).q == 37 * 37


@pytest.mark.parametrize("p", odd_primes(17))
def test_ext_generator_and_trace(p):
    F = make_ext_field(p)
    order = p * p - 1
    assert F.pow(F.gen, order) == 1
    assert all(F.pow(F.gen, order // r) != 1 for r in (2, 3, 5, 7, 11, 13, 17) if order % r == 0)
    assert sorted(F.dlog[1:]) == list(range(order))
    for c in range(p):
        assert F.trace(c) == 2 * c % p
    for x in range(0, p * p, 7):
        for y in range(0, p * p, 5):
            s = (x % p + y % p) % p + ((x // p + y // p) % p) * p
            assert F.trace(s) == (F.trace(x) + F.trace(y)) % p
        # Frobenius: x^p has the same trace, and x + x^p lies in the base field
        assert F.trace(F.pow(x, p)) == F.trace(x)


@pytest.mark.parametrize("p", odd_primes(17))
def test_ext_quadratic_character_is_legendre_of_norm(p):
    F = make_ext_field(p)
    base = make_field(p)
    for x in range(1, p * p):
        eta = 1 if F.dlog[x] % 2 == 0 else -1
        assert eta == legendre(F.norm(x), base)
    # base-field elements are all squares upstairs
    assert all(F.dlog[c] % 2 == 0 for c in range(1, p))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
