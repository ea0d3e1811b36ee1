import mpmath
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from qlaurent.laurent import ExactLaurentSeries
from qlaurent.tables import (
    bernoulli,
    bernoulli_poly,
    eulerian_poly,
    norlund,
    power_sum_by_residue,
    restricted_p,
    stirling2,
    twisted_bernoulli,
    unrestricted_p,
)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == mpq(-1, 2)
    assert bernoulli(2) == mpq(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == mpq(-691, 2730)
    assert all(bernoulli(2 * j + 1) == 0 for j in range(1, 15))


def test_norlund_base_cases():
    for alpha in range(-3, 6):
        assert norlund(0, alpha) == 1
        assert norlund(1, alpha) == mpq(-alpha, 2)
    for n in range(21):
        assert norlund(n, 1) == bernoulli(n)


def test_norlund_matches_series_definition():
    # (z/(e^z - 1))^alpha = exp(alpha * log(z/(e^z-1))); compare coefficients.
    order = 13
    fact = [1]
    for i in range(1, order + 2):
        fact.append(fact[-1] * i)
    base = ExactLaurentSeries(
        1, 0, [mpq(1, fact[n + 1]) for n in range(order + 1)], order
    )  # (e^z - 1)/z
    logb = base.log()
    for alpha in range(-3, 6):
        s = logb.scale(-alpha).exp()
        for n in range(order):
            assert s.coefficient(n).rational_value() == norlund(n, alpha) / fact[n]


def test_stirling_values():
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, 0) == 0 for n in range(1, 6))
    assert all(stirling2(n, 1) == 1 for n in range(1, 8))
    assert stirling2(4, 2) == 7


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.integers(-20, 20), st.integers(1, 12))
def test_bernoulli_poly_symmetry(n, num, den):
    q = mpq(num, den)
    assert bernoulli_poly(n, q) == (-1) ** n * bernoulli_poly(n, 1 - q)


def test_bernoulli_poly_values():
    assert bernoulli_poly(0, mpq(3, 7)) == 1
    assert bernoulli_poly(1, mpq(3, 7)) == mpq(3, 7) - mpq(1, 2)


def test_twisted_bernoulli_at_one():
    for m in range(11):
        v = twisted_bernoulli(m, 4, 0)
        assert v.is_rational() and v.rational_value() == bernoulli(m)


def test_twisted_bernoulli_special_values():
    for k, j in ((3, 1), (4, 1), (4, 2), (6, 5)):
        assert twisted_bernoulli(0, k, j).is_zero()
    v = twisted_bernoulli(1, 2, 1)
    assert v.is_rational() and v.rational_value() == mpq(-1, 2)


def test_twisted_bernoulli_generating_function():
    # sum_m beta_m(rho) z^m / m! should match z/(rho e^z - 1) numerically.
    dps = 40
    with mpmath.mp.workdps(dps + 10):
        z = mpmath.mpf("0.1")
        for k, j in ((3, 1), (4, 1), (5, 2), (6, 1)):
            rho = mpmath.expjpi(mpmath.mpf(2 * j) / k)
            target = z / (rho * mpmath.exp(z) - 1)
            acc = mpmath.mpc(0)
            fact = 1
            for m in range(40):
                if m:
                    fact *= m
                acc += twisted_bernoulli(m, k, j).embed(dps) * z**m / fact
            assert abs(acc - target) < mpmath.mpf(10) ** -(dps - 5)


def test_eulerian_polynomials():
    assert eulerian_poly(0) == (1,)
    assert eulerian_poly(1) == (1,)
    assert eulerian_poly(2) == (1, 1)
    assert eulerian_poly(3) == (1, 4, 1)


def test_partition_counts():
    assert restricted_p(5, 0) == 1
    assert unrestricted_p(5) == 7
    assert restricted_p(2, 6) == 4
    for n in range(61):
        assert restricted_p(n + 3, n) == unrestricted_p(n)
        assert restricted_p(max(n, 1), n) == unrestricted_p(n)


def test_power_sums_by_residue():
    k, N, n_max = 4, 17, 6
    table = power_sum_by_residue(k, N, n_max)
    for n in range(1, n_max + 1):
        for r in range(k):
            direct = sum(j**n for j in range(1, N + 1) if j % k == r)
            assert table[n][r] == direct
