"""Saddle-point expansion coefficients against their closed forms."""

import mpmath
import pytest
from gmpy2 import mpq

from qlaurent import asym

DPS = 55
TOL = mpmath.mpf("1e-40")


def test_bell_partial_anchors():
    with mpmath.mp.workdps(30):
        p = [mpmath.mpc(2, 1), mpmath.mpc(-1, 3), mpmath.mpc(0.5)]
        for j in range(1, 4):
            assert abs(asym.bell_partial(j, j, p) - p[0] ** j) < 1e-20
        assert abs(asym.bell_partial(2, 1, p) - p[1]) < 1e-20
        assert abs(asym.bell_partial(3, 2, p) - 2 * p[0] * p[1]) < 1e-20
        assert asym.bell_partial(0, 0, p) == 1
        assert asym.bell_partial(2, 0, p) == 0


def test_saddle_coefficient_scaling():
    # quadratic-and-higher saddle coefficients for the rescaled phase are the
    # k=1 coefficients times k^(s+1)
    ctx1 = asym.get_context(1, 10, 40)
    for k in (2, 3, 4):
        ctxk = asym.get_context(k, 10, 40)
        with mpmath.mp.workdps(50):
            for s in range(7):
                ref = ctx1.p_perron[s] * mpmath.mpf(k) ** (s + 1)
                assert abs(ctxk.p_perron[s] - ref) < abs(ref) * mpmath.mpf("1e-30")


def test_leading_coefficient_about_one():
    with mpmath.mp.workdps(DPS + 10):
        for m in range(-4, 4):
            c0 = asym.c_coeffs(m, 1, DPS)[0]
            ref = asym.c0_closed(m, DPS)
            assert abs(c0 - ref) < TOL * max(1, abs(ref))


def test_second_coefficient_about_one():
    with mpmath.mp.workdps(DPS + 10):
        for m in range(-4, 4):
            c1 = asym.c_coeffs(m, 2, DPS)[1]
            ref = asym.c1_closed(m, DPS)
            assert abs(c1 - ref) < TOL * max(1, abs(ref))


def test_leading_coefficient_about_minus_one():
    with mpmath.mp.workdps(DPS + 10):
        for m in (-3, 0, 2):
            for N_2 in (0, 1):
                d0 = asym.d_coeffs(m, N_2, 1, DPS)[0]
                ref = asym.d0_closed(m, N_2, DPS)
                assert abs(d0 - ref) < TOL * max(1, abs(ref))


def test_leading_coefficient_general_roots():
    with mpmath.mp.workdps(DPS + 10):
        for k in (2, 3, 4):
            for h in range(1, k):
                if k == 4 and h == 2:
                    continue
                for N_k in range(k):
                    e0 = asym.e_coeffs(k, h, -1, N_k, 1, DPS)[0]
                    ref = asym.e0_closed(k, h, -1, N_k, DPS)
                    assert abs(e0 - ref) < TOL * max(1, abs(ref))


def test_tail_factor_periodicity():
    # the residue-class tail factor repeats with period k
    with mpmath.mp.workdps(40):
        for k, h in ((3, 1), (4, 1)):
            a = asym.e0_closed(k, h, -2, 1, 35)
            b = asym.e0_closed(k, h, -2, 1 + k, 35)
            assert abs(a - b) < mpmath.mpf("1e-25")


def test_leading_wave_coefficients():
    with mpmath.mp.workdps(DPS + 10):
        for k in (1, 2, 3):
            for lam in (mpq(3, 4), mpq(1), mpq(2)):
                for N_k in range(k):
                    for n_k in range(k):
                        a0 = asym.wave_coeffs(k, N_k, n_k, lam, 1, DPS)[0]
                        ref = asym.a0_closed(k, N_k, n_k, lam, DPS)
                        assert abs(a0 - ref) < TOL * max(1, abs(ref))


def test_first_wave_leading_closed_form():
    with mpmath.mp.workdps(60):
        ctx = asym.get_context(1, 8, DPS)
        z0 = mpmath.mpc(ctx.constants.z0)
        lam = mpq(10, 7)
        ref = z0 * mpmath.exp(-z0 * (mpmath.mpf(10) / 7 + mpmath.mpf(1) / 2)) / (
            mpmath.pi * 1j
        )
        assert abs(asym.a0_closed(1, 0, 0, lam, DPS) - ref) < TOL


def test_conjugate_root_pairing():
    # the expansion value at the conjugate root is the conjugate value,
    # and wave expansions for real targets come out real
    with mpmath.mp.workdps(50):
        a = asym.eval_asym_laurent(3, 1, -2, 4000, 3, 45)
        b = asym.eval_asym_laurent(3, 2, -2, 4000, 3, 45)
        assert abs(a - mpmath.conj(b)) < mpmath.mpf("1e-35") * max(1, abs(a))
        w = asym.eval_asym_wave(3, 4001, 4001, 3, 45)
        assert isinstance(w, mpmath.mpf)


def test_limit_coefficients():
    with mpmath.mp.workdps(60):
        ref = -mpmath.mpf(6) / 25 - 12 * mpmath.sqrt(3) / (125 * mpmath.pi)
        assert abs(asym.rademacher_inf(1, 50) - ref) < mpmath.mpf("1e-45")
        assert abs(asym.rademacher_inf(4, 50) - mpmath.mpf("0.03216")) < mpmath.mpf(
            "5e-6"
        )


def test_invalid_root_rejected():
    with pytest.raises(ValueError):
        asym.eval_asym_laurent(4, 2, -1, 100, 3, 30)
