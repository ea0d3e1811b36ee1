"""Exact Laurent coefficients of 1/((q;q)_N) at roots of unity.

Two independent exact routes are provided: a direct series oracle that
inverts each factor 1 - q^j around q = zeta, and a closed evaluation that
reads one coefficient of the exponential of an explicit cubic-time series.
A third, floating-point route handles large N with adaptive precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz, fac

from .cyclotomic import CyclotomicElement
from .laurent import ExactLaurentSeries
from .tables import power_sum_by_residue, twisted_bernoulli


@dataclass(frozen=True)
class CoeffRequest:
    """Laurent coefficient A_m at the root exp(2*pi*i*h/k) for 1/((q;q)_N)."""

    k: int
    h: int
    m: int
    N: int

    def __post_init__(self):
        if self.k < 1 or self.N < 0:
            raise ValueError("need k >= 1 and N >= 0")
        if math.gcd(self.h, self.k) != 1:
            raise ValueError("h must be coprime to k")


def laurent_expansion_oracle(k: int, h: int, N: int, m_max: int) -> ExactLaurentSeries:
    """Laurent expansion of 1/((q;q)_N) in t = q - zeta_k^h, up to t^m_max.

    Brute-force reference: each factor 1 - q^j is expanded as a polynomial
    in t and inverted as a series.  Quadratic per factor, used as the
    oracle for the closed evaluation below.
    """
    if math.gcd(h, k) != 1:
        raise ValueError("h must be coprime to k")
    s = N // k
    order = m_max + s + 4
    result = ExactLaurentSeries.constant(k, 1, order + s)
    for j in range(1, N + 1):
        coeffs = [CyclotomicElement.one(k) - CyclotomicElement.root(k, h * j)]
        for i in range(1, j + 1):
            coeffs.append(
                -gmpy2.bincoef(j, i) * CyclotomicElement.root(k, h * (j - i))
            )
        factor = ExactLaurentSeries(k, 0, coeffs, order)
        result = result * factor.invert()
    return result


def _series_coeffs(k: int, h: int, m: int, N: int) -> list[CyclotomicElement]:
    """The coefficients c_1..c_M of the exponent series for A_m."""
    s = N // k
    M = s + m
    T = power_sum_by_residue(k, N, M if M >= 1 else 1)
    cs = [CyclotomicElement.zero(k)]  # placeholder for index 0
    for nu in range(1, M + 1):
        acc = CyclotomicElement.zero(k)
        for r in range(k):
            beta = twisted_bernoulli(nu, k, h * r)
            if beta.is_zero():
                continue
            S = mpq(T[nu][r])
            if r == 0:
                S += m + 1
            if S:
                acc = acc + S * beta
        c = -mpq(1, nu * fac(nu)) * acc
        if nu == 1:
            c = c + CyclotomicElement.from_rational(
                k, -mpq(m) - mpq(N * (N + 1), 2)
            )
        cs.append(c)
    return cs


def laurent_coeff_exact(k: int, h: int, m: int, N: int) -> CyclotomicElement:
    """A_m(zeta_k^h, N) as an exact element of Q(zeta_k).

    Zero for m below minus the pole order floor(N/k).
    """
    req = CoeffRequest(k, h, m, N)
    s = N // k
    M = s + m
    if M < 0:
        return CyclotomicElement.zero(k)
    if N == 0:
        return CyclotomicElement.from_rational(k, 1 if m == 0 else 0)
    cs = _series_coeffs(k, h, m, N)
    if M == 0:
        e_M = CyclotomicElement.one(k)
    else:
        series = ExactLaurentSeries(k, 1, cs[1:], M + 1)
        e_M = series.exp().coefficient(M)
    pref = _prefactor(k, h, N) * CyclotomicElement.root(k, -h * m)
    return pref * e_M


def _prefactor(k: int, h: int, N: int) -> CyclotomicElement:
    """(-1)^s / (k^(2s+1) s!) times prod_{w=N%k+1}^{k-1} (1 - zeta^w)."""
    s = N // k
    pref = CyclotomicElement.from_rational(
        k, mpq((-1) ** s, mpz(k) ** (2 * s + 1) * fac(s))
    )
    for w in range(N % k + 1, k):
        pref = pref * (CyclotomicElement.one(k) - CyclotomicElement.root(k, h * w))
    return pref


def rademacher_coeff(h: int, k: int, ell: int, N: int) -> CyclotomicElement:
    """Partial-fraction coefficient C_{h,k,ell}(N) = A_{-ell}(zeta_k^h, N)."""
    return laurent_coeff_exact(k, h, -ell, N)


def sylvester_wave_exact(k: int, N: int, n: int) -> mpq:
    """The k-th wave W_k(N, n) of the restricted partition count, exactly.

    Summing the residue at each primitive k-th root of unity via the Galois
    action; the total is provably rational and that is asserted.
    """
    if k < 1 or N < 0:
        raise ValueError("need k >= 1 and N >= 0")
    if k > N:
        return mpq(0)
    s = N // k
    M = s - 1
    T = power_sum_by_residue(k, N, max(M, 1))
    cs = []
    for nu in range(1, M + 1):
        acc = CyclotomicElement.zero(k)
        for r in range(k):
            beta = twisted_bernoulli(nu, k, r)
            if beta.is_zero() or not T[nu][r]:
                continue
            acc = acc + mpq(T[nu][r]) * beta
        c = -mpq(1, nu * fac(nu)) * acc
        if nu == 1:
            c = c + CyclotomicElement.from_rational(k, -mpq(n) - mpq(N * (N + 1), 2))
        cs.append(c)
    if M == 0:
        e_M = CyclotomicElement.one(k)
    else:
        series = ExactLaurentSeries(k, 1, cs, M + 1)
        e_M = series.exp().coefficient(M)
    contrib = _prefactor(k, 1, N) * CyclotomicElement.root(k, -n) * e_M
    total = CyclotomicElement.zero(k)
    for h in range(1, k + 1):
        if math.gcd(h, k) == 1:
            total = total + contrib.galois(h)
    result = -total
    return result.rational_value()


def partial_fraction_residual(N: int, q, dps: int = 50):
    """Numerical residual of the full partial-fraction identity at a point q.

    Evaluates 1/((q;q)_N) directly and through the sum over all poles of the
    exact coefficients C_{h,k,ell}(N); returns |difference| as an mpf.
    """
    import mpmath

    with mpmath.mp.workdps(dps + 15):
        if isinstance(q, (mpq, int)):
            q = mpmath.mpf(mpq(q).numerator) / mpmath.mpf(mpq(q).denominator)
        q = mpmath.mpc(q)
        direct = mpmath.mpc(1)
        for j in range(1, N + 1):
            direct /= 1 - q**j
        acc = mpmath.mpc(0)
        for k in range(1, N + 1):
            for h in range(1, k + 1):
                if math.gcd(h, k) != 1:
                    continue
                zeta = mpmath.expjpi(mpmath.mpf(2 * h) / k)
                base = q - zeta
                for ell in range(1, N // k + 1):
                    c = rademacher_coeff(h, k, ell, N)
                    acc += c.embed(dps + 15, h=1) * base ** (-ell)
        return +abs(direct - acc)


# ----------------------------------------------------------------------
# floating-point route for large N (adaptive precision)
# ----------------------------------------------------------------------


def _root_of_unity(k: int, h: int):
    h %= k
    if h == 0:
        return gmpy2.mpfr(1)
    if 2 * h == k:
        return gmpy2.mpfr(-1)
    ang = 2 * gmpy2.const_pi() * h / k
    return gmpy2.mpc(gmpy2.cos(ang), gmpy2.sin(ang))


def _beta_over_fact(k: int, h: int, length: int) -> list:
    """[beta_n(zeta_k^h)/n! for n = 0..length-1] at the current precision.

    Series inversion of (rho*e^z - 1)/z at rho = 1, otherwise of rho*e^z - 1
    multiplied back by z.
    """
    if h % k == 0:
        # Bernoulli: invert sum z^j/(j+1)!
        d = []
        f = gmpy2.mpfr(1)
        for j in range(length):
            f /= j + 1
            d.append(f)
        inv = _series_invert(d, length)
        return inv
    rho = _root_of_unity(k, h)
    d = [rho - 1]
    term = rho
    for j in range(1, length):
        term /= j
        d.append(term)
    inv = _series_invert(d, length)
    # beta_n/n! = [z^(n-1)] of the inverse, beta_0 = 0
    return [gmpy2.mpfr(0)] + inv[: length - 1]


def _series_invert(d: list, length: int) -> list:
    out = [1 / d[0]]
    for m in range(1, length):
        acc = 0
        for i in range(1, min(m, len(d) - 1) + 1):
            acc += d[i] * out[m - i]
        out.append(-acc / d[0])
    return out


def _exp_coeff_top(cs: list, M: int):
    """[z^M] exp(sum cs[i] z^i) plus a magnitude-growth estimate.

    Returns (value, lost_bits) where lost_bits estimates the cancellation in
    the recurrence, measured with 53-bit magnitude shadowing.
    """
    if M == 0:
        return gmpy2.mpfr(1), 0.0
    E = [cs[0] * 0 + 1] + [None] * M
    ics = [None] + [i * cs[i] for i in range(1, M + 1)]
    shadow = gmpy2.mpfr  # shadow values are kept at 53 bits
    ics_abs = [None] + [shadow(abs(ics[i]), precision=53) for i in range(1, M + 1)]
    Eabs = [shadow(1, precision=53)] + [None] * M
    for m in range(1, M + 1):
        acc = 0
        aacc = 0
        for i in range(1, m + 1):
            acc += ics[i] * E[m - i]
            aacc += ics_abs[i] * Eabs[m - i]
        E[m] = acc / m
        Eabs[m] = shadow(aacc / m, precision=53)
    final = abs(E[M])
    if final == 0 or Eabs[M] == 0:
        lost = 0.0
    else:
        ratio = Eabs[M] / shadow(final, precision=53)
        lost = float(gmpy2.log2(ratio)) if ratio > 1 else 0.0
    return E[M], lost


def _laurent_numeric_once(k: int, h: int, m: int, N: int, prec: int):
    """One fixed-precision evaluation of A_m(zeta_k^h, N); returns (mpc, lost_bits)."""
    s = N // k
    M = s + m
    if M < 0:
        return gmpy2.mpc(0), 0.0
    with gmpy2.context(precision=prec):
        T = _power_sums_float(k, N, max(M, 1))
        betas = [_beta_over_fact(k, h * r, M + 1) for r in range(k)]
        cs = [gmpy2.mpfr(0)] * (M + 1)
        for nu in range(1, M + 1):
            acc = gmpy2.mpfr(0)
            for r in range(k):
                b = betas[r][nu]
                if b == 0:
                    continue
                S = T[nu][r] + (m + 1 if r == 0 else 0)
                acc = acc + b * S
            cs[nu] = -acc / nu
        cs[1] += -(m + gmpy2.mpfr(N) * (N + 1) / 2)
        e_M, lost = _exp_coeff_top(cs, M)
        pref = _root_of_unity(k, -h * m) * _prefactor_float(k, h, N)
        return gmpy2.mpc(pref * e_M), lost


def _power_sums_float(k: int, N: int, n_max: int) -> list:
    T = [[gmpy2.mpfr(0)] * k for _ in range(n_max + 1)]
    for j in range(1, N + 1):
        r = j % k
        p = gmpy2.mpfr(1)
        for n in range(n_max + 1):
            T[n][r] += p
            p *= j
    return T


def _prefactor_float(k: int, h: int, N: int):
    s = N // k
    pref = gmpy2.mpfr((-1) ** s) / (gmpy2.mpfr(k) ** (2 * s + 1) * gmpy2.mpfr(fac(s)))
    for w in range(N % k + 1, k):
        pref = pref * (1 - _root_of_unity(k, h * w))
    return pref


def _adaptive(once, digits: int):
    """Run a fixed-precision evaluator adaptively until the value is stable.

    ``once(prec_bits) -> (value, lost_bits)``.  Two runs whose precisions
    differ by ~66 bits must agree to the requested number of digits.
    """
    goal_bits = int(digits * math.log2(10)) + 1
    prec = goal_bits + 140
    prev = None
    for _ in range(36):
        value, lost = once(prec)
        if lost >= prec - goal_bits - 40:
            # the run was noise-dominated; the loss estimate itself is a
            # lower bound, so jump well past it
            prec = 2 * (int(lost) + goal_bits + 80)
            prev = None
            continue
        need = goal_bits + int(lost) + 80
        if prec < need:
            prec = need
            prev = None
            continue
        if prev is not None:
            pv, pp = prev
            diff = abs(value - pv)
            scale = max(abs(value), abs(pv))
            if scale == 0 and diff == 0:
                return value
            if scale > 0 and diff <= scale * gmpy2.mpfr(2) ** (-goal_bits - 6):
                return value
        prev = (value, prec)
        prec += 66
    raise ArithmeticError("adaptive precision failed to stabilise")


def _as_mpmath(value, digits: int):
    """Exact conversion of a gmpy2 mpfr/mpc into the mpmath equivalent."""
    import mpmath

    def conv(x):
        num, den = x.as_integer_ratio()
        return mpmath.mpf(num) / mpmath.mpf(den)

    with mpmath.mp.workdps(digits + 15):
        if isinstance(value, gmpy2.mpc):
            return mpmath.mpc(conv(value.real), conv(value.imag))
        return conv(value)


def laurent_coeff_numeric(k: int, h: int, m: int, N: int, digits: int = 20):
    """A_m(zeta_k^h, N) as an mpmath mpc, correct to ``digits`` significant digits.

    Internally re-runs at increasing precision until two precision-separated
    evaluations agree; suitable for N in the thousands.
    """
    CoeffRequest(k, h, m, N)
    value = _adaptive(lambda p: _laurent_numeric_once(k, h, m, N, p), digits)
    return _as_mpmath(value, digits)


def _wave_numeric_once(k: int, N: int, n: int, prec: int):
    s = N // k
    M = s - 1
    with gmpy2.context(precision=prec):
        T = _power_sums_float(k, N, max(M, 1))
        total = gmpy2.mpc(0)
        lost_max = 0.0
        for h in range(1, k + 1):
            if math.gcd(h, k) != 1:
                continue
            betas = [_beta_over_fact(k, h * r, M + 1) for r in range(k)]
            cs = [gmpy2.mpfr(0)] * (M + 1)
            for nu in range(1, M + 1):
                acc = gmpy2.mpfr(0)
                for r in range(k):
                    b = betas[r][nu]
                    if b == 0 or T[nu][r] == 0:
                        continue
                    acc = acc + b * T[nu][r]
                cs[nu] = -acc / nu
            if M >= 1:
                cs[1] += -(gmpy2.mpfr(n) + gmpy2.mpfr(N) * (N + 1) / 2)
            e_M, lost = _exp_coeff_top(cs, M)
            lost_max = max(lost_max, lost)
            pref = _prefactor_float(k, h, N) * _root_of_unity(k, -h * n)
            total = total + pref * e_M
        return -total, lost_max


def sylvester_wave_numeric(k: int, N: int, n: int, digits: int = 20):
    """W_k(N, n) as an mpmath mpf, correct to ``digits`` significant digits."""
    import mpmath

    if k > N:
        return mpmath.mpf(0)
    value = _adaptive(lambda p: _wave_numeric_once(k, N, n, p), digits)
    return _as_mpmath(value.real, digits)
