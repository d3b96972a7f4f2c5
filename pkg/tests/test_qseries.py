import pytest

from ffhyp import qseries
from ffhyp.fieldcore import odd_primes
from ffhyp.gaussint import GaussianInt
from ffhyp.hyper import four_f_three_phi, three_f_two_quartic
from ffhyp.traceform import trace32_new

from oracles import count_points, series_product


@pytest.mark.parametrize("factors", [qseries.A_FACTORS, qseries.C_FACTORS, qseries.D_FACTORS])
def test_eta_product_matches_binomial_expansion(factors):
    assert list(qseries.eta_product(factors, 60).coeffs) == series_product(factors, 60)


def test_eta_examples():
    assert qseries.d_coeff(3) == -4
    assert qseries.c_coeff(5) == -6 and qseries.c_coeff(13) == 10
    assert qseries.a_coeff(5) == -2 and qseries.a_coeff(13) == 6
    for f in (qseries.a_coeff, qseries.c_coeff, qseries.d_coeff):
        assert f(1) == 1
    s = qseries.eta_product(qseries.A_FACTORS, 10)
    assert s[0] == 0 and s.precision == 10
    with pytest.raises(ValueError):
        qseries.eta_product(qseries.A_FACTORS, 0)


@pytest.mark.parametrize("p", odd_primes(200))
def test_a_is_trace_of_cm_curve(p):
    # y^2 = x^3 - x
    assert qseries.a_coeff(p) == p + 1 - count_points(p, 0, -1, 0)
    if p % 4 == 3:
        assert qseries.a_coeff(p) == 0


def test_b_fixture_and_trace_route():
    assert qseries.b_coeff(5) == 2
    assert qseries.b_coeff(3) == GaussianInt(0, 4)
    assert qseries.b_coeff(29) == trace32_new(29) // 2
    with pytest.raises(qseries.UnavailableError):
        qseries.b_coeff(19)
    for p in (5, 13, 17):
        assert trace32_new(p) == 2 * int(qseries.b_coeff(p))


@pytest.mark.parametrize("p", odd_primes(17))
def test_b_parity(p):
    b = qseries.b_coeff(p)
    assert (b.im == 0) if p % 4 == 1 else (b.re == 0)


def test_lambda_examples():
    assert qseries.lambda_p(7) == 0
    assert qseries.lambda_p(5) == 4
    assert qseries.lambda_p(13) == 84
    assert qseries.xi(13) == -1 and qseries.xi(17) == 1 and qseries.xi(7) == 1


def test_a_p2_examples():
    assert qseries.a_p2(3) == 6
    # 5*2^2 + 25*(-2)^2 - 2*125
    assert qseries.a_p2(5) == -130
    assert qseries.a_p2(7) == 238


@pytest.mark.parametrize("p", odd_primes(200))
def test_siegel_bridge_matches_4f3(p):
    value = four_f_three_phi(-1, p)
    assert value.rounded == qseries.xi(p) * qseries.lambda_p(p)


@pytest.mark.parametrize("p", [p for p in odd_primes(200) if p % 4 == 1])
def test_b_matches_3f2(p):
    assert three_f_two_quartic(p).rounded == qseries.b_coeff(p)


def test_conjecture_examples():
    assert qseries.conjecture6_check(3).lhs == -12
    assert qseries.conjecture6_check(5).lhs == 276
    assert qseries.conjecture6_check(7).lhs == -476
    with pytest.raises(qseries.UnavailableError):
        qseries.conjecture6_check(19)


@pytest.mark.parametrize("p", odd_primes(17))
def test_conjecture(p):
    rec = qseries.conjecture6_check(p)
    assert GaussianInt.nearest(rec.rhs) == rec.lhs and rec.residual < 1e-5


def test_bridge_record():
    b = qseries.bridge(13)
    assert (b.lambda_p, b.xi_p, b.a_p2) == (84, -1, qseries.a_p2(13))
