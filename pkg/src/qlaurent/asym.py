"""Saddle-point asymptotic expansions of the Laurent coefficients and of
the partial-fraction waves, in powers of 1/N with complex coefficients.

Everything is organised around one saddle point z0/k of the scaled
dilogarithm phase; the expansion coefficients are assembled from truncated
Taylor series at that point and the classical steepest-descent coefficient
formula in terms of partial ordinary Bell polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
from gmpy2 import mpq

from .hp import ComplexSeries, SaddleConstants, find_w0, p_series_at, polylog_neg
from .tables import bernoulli, bernoulli_poly, eulerian_poly, norlund

# The closed evaluations of the leading expansion coefficients fix which
# square root of the quadratic saddle coefficient enters the descent
# formula; for this contour orientation it is the principal one.
_SQRT_BRANCH = 1


def _mpf_of(q) -> mpmath.mpf:
    q = mpq(q)
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def _binom_int(top: int, bot: int):
    """Binomial coefficient with integer (possibly negative) top."""
    if bot < 0:
        return mpmath.mpf(0)
    out = mpmath.mpf(1)
    for i in range(bot):
        out = out * (top - i) / (i + 1)
    return out


def _binom_frac(top, bot: int):
    out = mpmath.mpf(1)
    for i in range(bot):
        out = out * (top - i) / (i + 1)
    return out


def bell_partial(i: int, j: int, p):
    """Coefficient of x^i in (p[0] x + p[1] x^2 + ...)**j."""
    if j == 0:
        return mpmath.mpc(1) if i == 0 else mpmath.mpc(0)
    cur = [mpmath.mpc(0)] * (i + 1)
    for a, val in enumerate(p[:i]):
        cur[a + 1] = mpmath.mpc(val)
    out = cur
    for _ in range(j - 1):
        nxt = [mpmath.mpc(0)] * (i + 1)
        for a in range(i + 1):
            if out[a] == 0:
                continue
            for b in range(1, i + 1 - a):
                nxt[a + b] += out[a] * cur[b]
        out = nxt
    return out[i]


class SaddleContext:
    """Precomputed data for expansions at the saddle point z0/k."""

    def __init__(self, k: int, length: int, dps: int):
        self.k = k
        self.length = length
        self.dps = dps
        with mpmath.mp.workdps(dps + 15):
            self.constants = find_w0(dps + 10)
            z0 = mpmath.mpc(self.constants.z0)
            self.center = z0 / k
            phat = p_series_at(self.constants, length + 4, dps)
            # r_k(z) = p(kz)/k about z0/k has Taylor coefficients p_t k^(t-1)
            rhat = [phat.coeffs[t] * mpmath.mpf(k) ** (t - 1) for t in range(len(phat))]
            self.p_perron = [-rhat[s + 2] for s in range(length + 2)]
            self.sqrt_p0 = _SQRT_BRANCH * mpmath.sqrt(self.p_perron[0])
            self.z = ComplexSeries.identity(self.center, length)
            self.z_inv = self.z.invert()
            ez = [mpmath.exp(self.center)]
            for j in range(1, length):
                ez.append(ez[-1] * 0 + ez[0] / mpmath.factorial(j))
            self.ez = ComplexSeries(self.center, ez)
            self._bell = None
            self._cache = {}

    # -- roots of unity -------------------------------------------------

    def root(self, h: int) -> mpmath.mpc:
        with mpmath.mp.workdps(self.dps + 15):
            return mpmath.expjpi(mpmath.mpf(2 * (h % self.k)) / self.k)

    # -- the descent coefficients ----------------------------------------

    def _bell_table(self):
        """B-hat[i][j] for the ratio series p_s/p_0, i,j <= length-1."""
        if self._bell is not None:
            return self._bell
        with mpmath.mp.workdps(self.dps + 15):
            n = self.length
            x = [self.p_perron[i] / self.p_perron[0] for i in range(1, n + 1)]
            table = [[mpmath.mpc(0)] * n for _ in range(n)]
            for i in range(n):
                table[i][0] = mpmath.mpc(1) if i == 0 else mpmath.mpc(0)
            prev = [mpmath.mpc(1)] + [mpmath.mpc(0)] * (n - 1)  # (series)^0
            for j in range(1, n):
                cur = [mpmath.mpc(0)] * n
                for a in range(j - 1, n):
                    if prev[a] == 0:
                        continue
                    for b in range(1, n - a):
                        cur[a + b] += prev[a] * x[b - 1]
                for i in range(n):
                    table[i][j] = cur[i]
                prev = cur
            self._bell = table
            return table

    def alpha(self, q: ComplexSeries, n: int) -> mpmath.mpc:
        """The n-th steepest-descent coefficient for amplitude series q."""
        with mpmath.mp.workdps(self.dps + 15):
            bell = self._bell_table()
            tau = -mpmath.mpf(n + 1) / 2
            p0pow = self.sqrt_p0 ** (-(n + 1))
            acc = mpmath.mpc(0)
            for i in range(n + 1):
                qc = q.coeffs[n - i]
                if qc == 0:
                    continue
                inner = mpmath.mpc(0)
                for j in range(i + 1):
                    b = bell[i][j]
                    if b != 0:
                        inner += _binom_frac(tau, j) * b
                acc += qc * inner
            return p0pow * acc / 2


@lru_cache(maxsize=None)
def get_context(k: int, length: int, dps: int) -> SaddleContext:
    return SaddleContext(k, length, dps)


def _series_polylog_neg(ell: int, W: ComplexSeries) -> ComplexSeries:
    """Li_{1-ell}(W) for a series argument, ell >= 1."""
    one = ComplexSeries.constant(1, W.center, len(W))
    if ell == 1:
        return W * (one - W).invert()
    m = ell - 1
    num = ComplexSeries.constant(0, W.center, len(W))
    for a in reversed(eulerian_poly(m)):
        num = num * W + int(a)
    return W * num * _pow_int((one - W).invert(), m + 1)


def _pow_int(S: ComplexSeries, e: int) -> ComplexSeries:
    if e < 0:
        return _pow_int(S.invert(), -e)
    out = ComplexSeries.constant(1, S.center, len(S))
    base = S
    while e:
        if e & 1:
            out = out * base
        base = base * base
        e >>= 1
    return out


class RootPipeline:
    """All expansion series attached to one root of unity rho = zeta_k^h."""

    def __init__(self, ctx: SaddleContext, h: int):
        self.ctx = ctx
        self.h = h % ctx.k
        with mpmath.mp.workdps(ctx.dps + 15):
            self.rho = ctx.root(self.h)
        self._f = {}
        self._u = {}
        self._omega = {}
        self._phi = {}
        self._gamma = {}
        self._g = None

    def rho_pow(self, e: int) -> mpmath.mpc:
        return self.ctx.root(self.h * e)

    def g_series(self) -> ComplexSeries:
        """The square-root amplitude factor at the saddle point."""
        if self._g is not None:
            return self._g
        ctx = self.ctx
        with mpmath.mp.workdps(ctx.dps + 15):
            one = ComplexSeries.constant(1, ctx.center, ctx.length)
            base = (-1) * ctx.z * ((2 * mpmath.pi) * (one - ctx.ez)).invert()
            g = base.pow(mpmath.mpf(1) / 2)
            for j in range(1, ctx.k):
                rj = self.rho_pow(-j)
                ratio = (one - ctx.ez * rj) * (1 / (1 - rj))
                g = g * ratio.pow(mpmath.mpf(j) / ctx.k - mpmath.mpf(1) / 2)
            self._g = g
            return g

    def f_series(self, ell: int) -> ComplexSeries:
        """Coefficient of N^-ell in the exponent correction."""
        if ell in self._f:
            return self._f[ell]
        ctx = self.ctx
        with mpmath.mp.workdps(ctx.dps + 15):
            k = ctx.k
            bracket = ComplexSeries.constant(0, ctx.center, ctx.length)
            if ell == 1:
                bracket = bracket + mpmath.mpf(1) / 12
            b = bernoulli(ell + 1)
            if b:
                bracket = bracket + _mpf_of(b) * _series_polylog_neg(ell, ctx.ez)
            for j in range(1, k):
                bj = bernoulli_poly(ell + 1, mpq(j, k))
                if not bj:
                    continue
                rj = self.rho_pow(-j)
                term = _series_polylog_neg(ell, ctx.ez * rj) - polylog_neg(
                    ell - 1, rj, ctx.dps
                )
                bracket = bracket + _mpf_of(bj) * term
            kz_pow = _pow_int(k * ctx.z, ell)
            sign = 1 if ell % 2 else -1
            f = kz_pow * bracket * (mpmath.mpf(sign) / mpmath.factorial(ell + 1))
            self._f[ell] = f
            return f

    def _exp_family(self, jmax: int, include_z: bool, store: dict):
        """u_j (with z + f_1) or omega_j (with f_1 alone), j <= jmax."""
        ctx = self.ctx
        with mpmath.mp.workdps(ctx.dps + 15):
            if 0 not in store:
                store[0] = ComplexSeries.constant(1, ctx.center, ctx.length)
            top = max(store)
            for j in range(top + 1, jmax + 1):
                acc = ComplexSeries.constant(0, ctx.center, ctx.length)
                for i in range(1, j + 1):
                    a = self.f_series(i)
                    if i == 1 and include_z:
                        a = a + ctx.z
                    acc = acc + (i * a) * store[j - i]
                store[j] = acc * (mpmath.mpf(1) / j)
        return [store[j] for j in range(jmax + 1)]

    def u_list(self, jmax: int):
        return self._exp_family(jmax, True, self._u)

    def omega_list(self, jmax: int):
        return self._exp_family(jmax, False, self._omega)

    def gamma_list(self, m: int, jmax: int):
        """gamma_j = sum_r B_r^(m+1) z^(r-m-1)/r! * u_(j-r)."""
        key = (m, jmax)
        if key in self._gamma:
            return self._gamma[key]
        ctx = self.ctx
        u = self.u_list(jmax)
        with mpmath.mp.workdps(ctx.dps + 15):
            out = []
            zp = _pow_int(ctx.z, -m - 1)
            zpows = [zp]
            for r in range(1, jmax + 1):
                zpows.append(zpows[-1] * ctx.z)
            for j in range(jmax + 1):
                acc = ComplexSeries.constant(0, ctx.center, ctx.length)
                for r in range(j + 1):
                    nor = norlund(r, m + 1)
                    if not nor:
                        continue
                    c = _mpf_of(nor) / mpmath.factorial(r)
                    acc = acc + c * (zpows[r] * u[j - r])
                out.append(acc)
            self._gamma[key] = out
            return out

    def phi_list(self, v: int, nmax: int):
        """Correction factors for N not divisible by k, as 1/N coefficients."""
        key = (v, nmax)
        if key in self._phi:
            return self._phi[key]
        ctx = self.ctx
        with mpmath.mp.workdps(ctx.dps + 15):
            one = ComplexSeries.constant(1, ctx.center, ctx.length)
            zero = ComplexSeries.constant(0, ctx.center, ctx.length)
            prod = [one] + [zero] * nmax
            for r in range(v):
                fac = []
                rr = self.rho_pow(-r)
                for j in range(nmax + 1):
                    kap = (-rr) * self.ctx.ez * (
                        _pow_int((-r) * ctx.z, j) * (1 / mpmath.factorial(j))
                    )
                    if j == 0:
                        kap = kap + one
                    fac.append(kap)
                nxt = [zero] * (nmax + 1)
                for a in range(nmax + 1):
                    for b in range(nmax + 1 - a):
                        nxt[a + b] = nxt[a + b] + prod[a] * fac[b]
                prod = nxt
            self._phi[key] = prod
            return prod


def _pipeline(k: int, h: int, r: int, dps: int) -> RootPipeline:
    ctx = get_context(k, 2 * r + 6, dps)
    key = ("pipe", h % k)
    if key not in ctx._cache:
        ctx._cache[key] = RootPipeline(ctx, h)
    return ctx._cache[key]


def _primitive_residues(k: int):
    return [h for h in range(1, k + 1) if math.gcd(h, k) == 1] if k > 1 else [0]


# -- Laurent coefficient expansions --------------------------------------


def e_star_coeffs(k: int, h: int, m: int, N_k: int, r: int, dps: int):
    """e*_j for j = 0..r-1 at the root zeta_k^h with N = N_k mod k."""
    pipe = _pipeline(k, h, r, dps)
    ctx = pipe.ctx
    v = (k - N_k) % k
    with mpmath.mp.workdps(dps + 15):
        jmax = r - 1
        gam = pipe.gamma_list(m, jmax)
        phi = pipe.phi_list(v, jmax)
        gstar = []
        for j in range(jmax + 1):
            acc = ComplexSeries.constant(0, ctx.center, ctx.length)
            for n in range(j + 1):
                acc = acc + gam[n] * phi[j - n]
            gstar.append(acc)
        g = pipe.g_series()
        pref = -mpmath.sqrt(k) * pipe.rho_pow(-m) / (mpmath.pi * 1j)
        out = []
        for j in range(jmax + 1):
            acc = mpmath.mpc(0)
            for s in range(j + 1):
                acc += mpmath.gamma(s + mpmath.mpf(1) / 2) * ctx.alpha(
                    g * gstar[j - s], 2 * s
                )
            out.append(pref * acc)
        return out


def e_coeffs(k: int, h: int, m: int, N_k: int, r: int, dps: int):
    """Expansion coefficients e_{m,j}(zeta_k^h, N_k) for j = 0..r-1."""
    estar = e_star_coeffs(k, h, m, N_k, r, dps)
    v = (k - N_k) % k
    with mpmath.mp.workdps(dps + 15):
        if v == 0:
            return estar
        w0 = get_context(k, 2 * r + 6, dps).constants.w0
        w0v = mpmath.exp(-mpmath.mpf(v) / k * mpmath.log(w0))
        out = []
        for j in range(len(estar)):
            acc = mpmath.mpc(0)
            for n in range(j + 1):
                acc += (
                    mpmath.mpf(v) ** (j - n)
                    * _binom_int(m - 1 - n, j - n)
                    * estar[n]
                )
            out.append(w0v * acc)
        return out


def eval_asym_laurent(k: int, h: int, m: int, N: int, r: int, dps: int):
    """Asymptotic value of A_m(zeta_k^h, N) using r expansion terms."""
    if math.gcd(h, k) != 1 and k > 1:
        raise ValueError("h must be coprime to k")
    N_k = N % k
    e1 = e_coeffs(k, h % k if k > 1 else 0, m, N_k, r, dps)
    e2 = e_coeffs(k, (-h) % k if k > 1 else 0, m, N_k, r, dps)
    ctx = get_context(k, 2 * r + 6, dps)
    with mpmath.mp.workdps(dps + 15):
        w0 = ctx.constants.w0
        w0N = mpmath.exp(-mpmath.mpf(N) / k * mpmath.log(w0))
        s1 = sum(e1[j] / mpmath.mpf(N) ** j for j in range(r))
        s2 = sum(mpmath.conj(e2[j]) / mpmath.mpf(N) ** j for j in range(r))
        return +(mpmath.mpf(N) ** (m - 1) * (w0N * s1 + mpmath.conj(w0N) * s2))


def c_coeffs(m: int, r: int, dps: int):
    """Expansion coefficients about the root 1 (twice the k=1 e-coefficients)."""
    with mpmath.mp.workdps(dps + 15):
        return [2 * e for e in e_coeffs(1, 0, m, 0, r, dps)]


def d_coeffs(m: int, N_2: int, r: int, dps: int):
    """Expansion coefficients about the root -1 (twice the k=2 e-coefficients)."""
    with mpmath.mp.workdps(dps + 15):
        return [2 * e for e in e_coeffs(2, 1, m, N_2 % 2, r, dps)]


def d0_closed(m: int, N_2: int, dps: int):
    """Leading coefficient about -1 in closed form."""
    ctx = get_context(2, 8, dps)
    with mpmath.mp.workdps(dps + 15):
        z0 = mpmath.mpc(ctx.constants.z0)
        out = -mpmath.sqrt(2) / (mpmath.pi * 1j) * (-2 / z0) ** m
        out *= mpmath.exp(-z0 / 2)
        out *= mpmath.sqrt(1 + (-1) ** (N_2 % 2) * mpmath.exp(z0 / 2))
        return +out


# -- wave expansions -------------------------------------------------------


def wave_coeffs(k: int, N_k: int, n_k: int, lam, r: int, dps: int):
    """Coefficients a_{lambda,j}(N_k, n_k) for j = 0..r-1."""
    ctx = get_context(k, 2 * r + 6, dps)
    v = (k - N_k) % k
    with mpmath.mp.workdps(dps + 15):
        lam = _mpf_of(mpq(lam))
        jmax = r - 1
        astar = [mpmath.mpc(0)] * (jmax + 1)
        for h in _primitive_residues(k):
            pipe = _pipeline(k, h, r, dps)
            om = pipe.omega_list(jmax)
            phi = pipe.phi_list(v, jmax)
            # fold exp(lam*v*z/N) into the correction factors
            lphi = []
            for n in range(jmax + 1):
                acc = ComplexSeries.constant(0, ctx.center, ctx.length)
                for j in range(n + 1):
                    acc = acc + _pow_int(lam * v * ctx.z, j) * (
                        1 / mpmath.factorial(j)
                    ) * phi[n - j]
                lphi.append(acc)
            omstar = []
            for j in range(jmax + 1):
                acc = ComplexSeries.constant(0, ctx.center, ctx.length)
                for n in range(j + 1):
                    acc = acc + om[n] * lphi[j - n]
                omstar.append(acc)
            elam = ComplexSeries(
                ctx.center,
                [mpmath.mpc(c) for c in _exp_series_coeffs(-lam, ctx)],
            )
            glam = elam * pipe.g_series()
            xi_pow = ctx.root(-h * n_k)
            for j in range(jmax + 1):
                acc = mpmath.mpc(0)
                for s in range(j + 1):
                    acc += mpmath.gamma(s + mpmath.mpf(1) / 2) * ctx.alpha(
                        glam * omstar[j - s], 2 * s
                    )
                astar[j] += 2 * mpmath.sqrt(k) / (mpmath.pi * 1j) * xi_pow * acc
        if v == 0:
            return astar
        w0 = ctx.constants.w0
        w0v = mpmath.exp(-mpmath.mpf(v) / k * mpmath.log(w0))
        out = []
        for j in range(jmax + 1):
            acc = mpmath.mpc(0)
            for n in range(j + 1):
                acc += mpmath.mpf(v) ** (j - n) * _binom_int(-2 - n, j - n) * astar[n]
            out.append(w0v * acc)
        return out


def _exp_series_coeffs(c, ctx: SaddleContext):
    """Taylor coefficients of exp(c*z) about the context center."""
    e0 = mpmath.exp(c * ctx.center)
    out = [e0]
    for j in range(1, ctx.length):
        out.append(out[-1] * c / j)
    return out


def eval_asym_wave(k: int, N: int, n: int, r: int, dps: int):
    """Asymptotic value of the k-th wave W_k(N, n) using r expansion terms."""
    a = wave_coeffs(k, N % k, n % k, mpq(n, N), r, dps)
    ctx = get_context(k, 2 * r + 6, dps)
    with mpmath.mp.workdps(dps + 15):
        w0 = ctx.constants.w0
        w0N = mpmath.exp(-mpmath.mpf(N) / k * mpmath.log(w0))
        acc = sum(a[j] / mpmath.mpf(N) ** (j + 2) for j in range(r))
        return +mpmath.re(w0N * acc)


# -- closed forms for the leading coefficients -----------------------------


def e0_closed(k: int, h: int, m: int, N_k: int, dps: int):
    """Leading Laurent expansion coefficient in closed form."""
    ctx = get_context(k, 8, dps)
    with mpmath.mp.workdps(dps + 15):
        z0 = mpmath.mpc(ctx.constants.z0)
        w0 = mpmath.mpc(ctx.constants.w0)
        rho = ctx.root(h)
        ez = mpmath.exp(z0 / k)
        out = (-z0) / (2j * mpmath.pi * mpmath.exp(z0 / 2))
        out *= mpmath.sqrt(w0 / k) / mpmath.sqrt(1 - ez)
        for j in range(1, k):
            base = (1 - ez / rho**j) / (1 - rho ** (-j))
            out *= base ** (mpmath.mpf(j) / k - mpmath.mpf(1) / 2)
        out *= rho ** (-m) * (z0 / k) ** (-m - 1)
        out *= mpmath.exp(mpmath.mpf(N_k) / k * mpmath.log(w0))
        for j in range(1, N_k + 1):
            out /= 1 - rho**j * ez
        return +out


def c0_closed(m: int, dps: int):
    """Leading coefficient about the root 1: -1/(pi i z0^m e^(z0/2))."""
    ctx = get_context(1, 8, dps)
    with mpmath.mp.workdps(dps + 15):
        z0 = mpmath.mpc(ctx.constants.z0)
        return +(-1 / (mpmath.pi * 1j * z0**m * mpmath.exp(z0 / 2)))


def c1_closed(m: int, dps: int):
    """Second coefficient about the root 1, in closed form."""
    ctx = get_context(1, 8, dps)
    with mpmath.mp.workdps(dps + 15):
        z0 = mpmath.mpc(ctx.constants.z0)
        w0 = mpmath.mpc(ctx.constants.w0)
        inner = (
            mpmath.mpf(1) / 6 + (m - 1) / z0 + m * (m - 1) / z0**2
        )
        out = (m - 1) / mpmath.exp(z0 / 2) + w0 / mpmath.exp(3 * z0 / 2) * inner
        return +(out / (2j * mpmath.pi * z0 ** (m - 1)))


def a0_closed(k: int, N_k: int, n_k: int, lam, dps: int):
    """Leading wave expansion coefficient in closed form."""
    ctx = get_context(k, 8, dps)
    with mpmath.mp.workdps(dps + 15):
        lam = _mpf_of(mpq(lam))
        z0 = mpmath.mpc(ctx.constants.z0)
        w0 = mpmath.mpc(ctx.constants.w0)
        ez = mpmath.exp(z0 / k)
        pref = z0 / (mpmath.pi * 1j) * mpmath.exp(-z0 * (lam / k + mpmath.mpf(1) / 2))
        pref *= mpmath.sqrt(w0 / k) / mpmath.sqrt(1 - ez)
        acc = mpmath.mpc(0)
        for h in _primitive_residues(k):
            xi = ctx.root(h)
            term = ctx.root(-h * n_k)
            for j in range(1, k):
                base = (1 - ez / xi**j) / (1 - xi ** (-j))
                term *= base ** (mpmath.mpf(j) / k - mpmath.mpf(1) / 2)
            term *= mpmath.exp(mpmath.mpf(N_k) / k * mpmath.log(w0))
            for j in range(1, N_k + 1):
                term /= 1 - xi**j * ez
            acc += term
        return +(pref * acc)


# -- the limiting partial-fraction coefficients ---------------------------


def rademacher_inf(ell: int, dps: int = 50):
    """The limiting value proposed for C_{0,1,ell} as N grows.

    Built from the entire Bessel-type series L_{3/2} and an (ell-1)-fold
    forward difference in the shift parameter.
    """
    from .hp import bessel_L32

    with mpmath.mp.workdps(dps + 15):
        alpha0 = mpmath.mpf(1) / 24
        pi = mpmath.pi

        def f(alpha):
            return bessel_L32(-(pi**2) * (alpha + 1) / 6, dps)

        acc = mpmath.mpf(0)
        for i in range(ell):
            acc += (-1) ** (ell - 1 - i) * mpmath.binomial(ell - 1, i) * f(alpha0 + i)
        return +(-pi ** mpmath.mpf(2.5) / (12 * mpmath.sqrt(3)) * acc)
