"""Exact Laurent coefficients, principal-part coefficients, and waves."""

import math

import mpmath
import pytest
from gmpy2 import mpq

from qlaurent.cyclotomic import CyclotomicElement
from qlaurent.exact_coeffs import (
    CoeffRequest,
    laurent_coeff_exact,
    laurent_coeff_numeric,
    laurent_expansion_oracle,
    partial_fraction_residual,
    rademacher_coeff,
    sylvester_wave_exact,
    sylvester_wave_numeric,
)
from qlaurent.tables import restricted_p


def test_request_validation():
    with pytest.raises(ValueError):
        CoeffRequest(m=0, k=4, h=2, N=5)


def test_small_expansion_about_one():
    got = [laurent_coeff_exact(1, 0, m, 3).rational_value() for m in range(-3, 2)]
    assert got == [mpq(-1, 6), mpq(1, 4), mpq(-17, 72), mpq(25, 144), mpq(-91, 864)]


def test_single_factor():
    assert laurent_coeff_exact(1, 0, -1, 1).rational_value() == -1
    for m in range(0, 4):
        assert laurent_coeff_exact(1, 0, m, 1).is_zero()


def test_expansion_about_minus_one():
    assert laurent_coeff_exact(2, 1, -1, 2).rational_value() == mpq(1, 4)
    assert laurent_coeff_exact(2, 1, 0, 2).rational_value() == mpq(1, 4)
    assert laurent_coeff_exact(2, 1, 1, 2).rational_value() == mpq(3, 16)


def test_below_valuation_is_zero():
    assert laurent_coeff_exact(3, 1, -5, 9).is_zero()


def test_oracle_equivalence_medium_grid():
    for k in range(1, 5):
        for h in range(k if k > 1 else 1):
            if k > 1 and math.gcd(h, k) != 1:
                continue
            hh = h if k > 1 else 0
            for N in range(1, 11):
                s = N // k
                oracle = laurent_expansion_oracle(k, hh, N, 3)
                for m in range(-s, 4):
                    assert laurent_coeff_exact(k, hh, m, N) == oracle.coefficient(m)


def test_principal_part_at_order_N():
    # the deepest pole coefficient at a primitive N-th root is -xi/N^2
    N = 5
    xi = CyclotomicElement.root(N)
    expected = -xi * CyclotomicElement.from_rational(N, mpq(1, N * N))
    assert laurent_coeff_exact(N, 1, -1, N) == expected


def test_galois_symmetry():
    k, N = 5, 12
    for m in range(-2, 3):
        a = laurent_coeff_exact(k, 1, m, N)
        b = laurent_coeff_exact(k, k - 1, m, N)
        assert a.galois(k - 1) == b


def test_rademacher_coeff_range():
    assert rademacher_coeff(0, 1, 1, 3).rational_value() == mpq(-17, 72)
    assert rademacher_coeff(0, 1, 3, 3).rational_value() == mpq(-1, 6)
    assert rademacher_coeff(1, 3, 4, 9).is_zero()  # ell beyond the pole order


def test_wave_values_N5():
    assert sylvester_wave_exact(2, 5, 60) == mpq(135, 128)
    assert sylvester_wave_exact(3, 5, 60) == mpq(2, 27)
    assert sylvester_wave_exact(4, 5, 60) == mpq(1, 16)
    assert sylvester_wave_exact(5, 5, 60) == mpq(4, 25)


def test_wave_sum_is_partition_count():
    for N in range(1, 8):
        for n in range(0, 41, 7):
            total = sum(sylvester_wave_exact(k, N, n) for k in range(1, N + 1))
            assert total == restricted_p(N, n)


def test_wave_beyond_N_is_zero():
    assert sylvester_wave_exact(6, 5, 10) == 0


def test_wave_polynomial_degree_bound():
    # within a residue class mod k the wave is a polynomial in n of degree
    # < floor(N/k); its floor(N/k)-th finite difference vanishes
    for N, k in ((7, 2), (9, 3), (10, 2)):
        d = N // k
        for n0 in range(k):
            vals = [sylvester_wave_exact(k, N, n0 + j * k) for j in range(d + 1)]
            for _ in range(d):
                vals = [b - a for a, b in zip(vals, vals[1:])]
            assert vals == [0]


def test_partial_fraction_identity():
    with mpmath.mp.workdps(70):
        assert partial_fraction_residual(4, mpq(1, 3), 60) < mpmath.mpf("1e-50")
        assert partial_fraction_residual(6, mpmath.mpc(2, 1), 60) < mpmath.mpf("1e-48")
        assert partial_fraction_residual(1, 5, 60) < mpmath.mpf("1e-55")


def test_numeric_path_matches_exact():
    with mpmath.mp.workdps(40):
        for k, h, m, N in ((1, 0, -2, 40), (3, 1, -1, 25), (4, 1, 0, 30)):
            exact = laurent_coeff_exact(k, h, m, N).embed(35)
            approx = laurent_coeff_numeric(k, h, m, N, digits=18)
            assert abs(exact - approx) < abs(exact) * mpmath.mpf("1e-16")
        w_exact = sylvester_wave_exact(2, 21, 30)
        w = sylvester_wave_numeric(2, 21, 30, digits=18)
        ref = mpmath.mpf(w_exact.numerator) / mpmath.mpf(w_exact.denominator)
        assert abs(w - ref) < abs(ref) * mpmath.mpf("1e-16")
