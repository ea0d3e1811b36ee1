"""High-precision complex analysis support: dilogarithm, Clausen function,
negative-order polylogarithms, the saddle-point constants, and truncated
power series over mpmath complex numbers."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from gmpy2 import mpq

from .tables import bernoulli, eulerian_poly

# -- special functions -------------------------------------------------


def li2(w, dps: int = 50):
    """Dilogarithm sum_{j>=1} w^j / j^2 for |w| <= 0.97."""
    with mpmath.mp.workdps(dps + 15):
        w = mpmath.mpc(w)
        if abs(w) > mpmath.mpf("0.97"):
            raise ValueError("li2 series is restricted to |w| <= 0.97")
        eps = mpmath.mpf(10) ** (-(dps + 10))
        acc = mpmath.mpc(0)
        wp = mpmath.mpc(1)
        j = 0
        while True:
            j += 1
            wp *= w
            term = wp / (j * j)
            acc += term
            if abs(term) < eps * (1 - abs(w)):
                break
        return +acc


def clausen2(theta, dps: int = 50):
    """Clausen function Cl_2(theta) = sum_{j>=1} sin(j theta)/j^2.

    Uses the log-sine expansion with exact zeta(2n) coefficients after
    reducing the angle to [0, pi]; accurate to roughly dps digits.
    """
    with mpmath.mp.workdps(dps + 20):
        theta = mpmath.mpf(theta)
        pi = mpmath.pi
        two_pi = 2 * pi
        theta = theta - two_pi * mpmath.floor(theta / two_pi)
        sign = 1
        if theta > pi:
            theta = two_pi - theta
            sign = -1
        if theta == 0:
            return mpmath.mpf(0)
        # Cl_2(t) = t - t*log t + sum_n zeta(2n) t^(2n+1) / (n (2n+1) (2pi)^(2n))
        acc = theta - theta * mpmath.log(theta)
        ratio = (theta / two_pi) ** 2
        power = ratio
        eps = mpmath.mpf(10) ** (-(dps + 10))
        n = 1
        while True:
            z2n = _zeta_even(n)
            term = z2n * theta * power / (n * (2 * n + 1))
            acc += term
            if abs(term) < eps:
                break
            n += 1
            power *= ratio
            if n > 8 * (dps + 20):
                raise ArithmeticError("clausen2 series failed to converge")
        return +(sign * acc)


def _zeta_even(n: int):
    """zeta(2n) from the exact Bernoulli number, at current precision."""
    b = bernoulli(2 * n)
    val = mpmath.mpf(b.numerator) / mpmath.mpf(b.denominator)
    return (
        (-1) ** (n + 1)
        * (2 * mpmath.pi) ** (2 * n)
        * val
        / (2 * mpmath.factorial(2 * n))
    )


def polylog_neg(m: int, w, dps: int = 50):
    """Li_{-m}(w) for integer m >= 0, via the Eulerian polynomial closed form."""
    if m < 0:
        raise ValueError("m must be >= 0")
    with mpmath.mp.workdps(dps + 10):
        w = mpmath.mpc(w)
        if w == 1:
            raise ZeroDivisionError("Li_{-m} has a pole at w = 1")
        if m == 0:
            return +(w / (1 - w))
        num = mpmath.mpc(0)
        for i, a in enumerate(eulerian_poly(m)):
            num += int(a) * w**i
        return +(w * num / (1 - w) ** (m + 1))


def bessel_L32(y, dps: int = 50):
    """The entire function sum_{j>=0} y^j / (j! Gamma(j + 5/2))."""
    with mpmath.mp.workdps(dps + 15):
        y = mpmath.mpf(y)
        acc = mpmath.mpc(0) * 0
        term = 1 / mpmath.gamma(mpmath.mpf(5) / 2)
        j = 0
        acc = mpmath.mpf(0) + term
        while abs(term) > mpmath.mpf(10) ** (-(dps + 10)):
            j += 1
            term = term * y / (j * (j + mpmath.mpf(3) / 2))
            acc += term
        return +acc


# -- saddle point constants --------------------------------------------


@dataclass(frozen=True)
class SaddleConstants:
    """The distinguished dilogarithm saddle point and derived quantities."""

    w0: mpmath.mpc  # root of Li_2(w) - 2 pi i log(w) = 0 near 0.916 - 0.182i
    z0: mpmath.mpc  # 2 pi i + log(1 - w0)
    U: mpmath.mpf  # -log|w0|
    V: mpmath.mpf  # arg(1/w0)
    dps: int


def find_w0(dps: int = 60) -> SaddleConstants:
    """Solve Li_2(w) - 2 pi i log(w) = 0 by Newton iteration near 0.92 - 0.18i."""
    with mpmath.mp.workdps(dps + 20):
        w = mpmath.mpc("0.92", "-0.18")
        for _ in range(dps + 50):
            F = li2(w, dps + 15) - 2j * mpmath.pi * mpmath.log(w)
            dF = (-mpmath.log(1 - w) - 2j * mpmath.pi) / w
            step = F / dF
            w = w - step
            if abs(step) < mpmath.mpf(10) ** (-(dps + 12)) * abs(w):
                break
        else:
            raise ArithmeticError("saddle-point Newton iteration did not converge")
        z0 = 2j * mpmath.pi + mpmath.log(1 - w)
        U = -mpmath.log(abs(w))
        V = mpmath.arg(1 / w)
        return SaddleConstants(w0=+w, z0=+z0, U=+U, V=+V, dps=dps)


# -- truncated power series over mpmath --------------------------------


class ComplexSeries:
    """Truncated Taylor series sum_j c_j (z - center)^j with mpc coefficients.

    All operations truncate to the shorter operand.  The working precision
    is the ambient mpmath precision of the caller.
    """

    __slots__ = ("center", "coeffs")

    def __init__(self, center, coeffs):
        self.center = mpmath.mpc(center)
        self.coeffs = [mpmath.mpc(c) for c in coeffs]

    @staticmethod
    def constant(value, center, length: int) -> "ComplexSeries":
        return ComplexSeries(center, [value] + [0] * (length - 1))

    @staticmethod
    def identity(center, length: int) -> "ComplexSeries":
        """The series of z itself: center + (z - center)."""
        c = [center, 1] + [0] * (length - 2)
        return ComplexSeries(center, c[:length])

    def __len__(self):
        return len(self.coeffs)

    def _match(self, other):
        if not isinstance(other, ComplexSeries):
            n = len(self.coeffs)
            return ComplexSeries.constant(other, self.center, n)
        if other.center != self.center:
            raise ValueError("series have different centers")
        return other

    def __add__(self, other):
        other = self._match(other)
        n = min(len(self.coeffs), len(other.coeffs))
        return ComplexSeries(
            self.center, [self.coeffs[i] + other.coeffs[i] for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return ComplexSeries(self.center, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._match(other))

    def __rsub__(self, other):
        return self._match(other) - self

    def __mul__(self, other):
        if not isinstance(other, ComplexSeries):
            return ComplexSeries(self.center, [c * other for c in self.coeffs])
        other = self._match(other)
        n = min(len(self.coeffs), len(other.coeffs))
        out = [mpmath.mpc(0)] * n
        for i in range(n):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return ComplexSeries(self.center, out)

    __rmul__ = __mul__

    def truncate(self, length: int) -> "ComplexSeries":
        return ComplexSeries(self.center, self.coeffs[:length])

    def invert(self) -> "ComplexSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has vanishing constant term")
        n = len(self.coeffs)
        out = [1 / c0] + [mpmath.mpc(0)] * (n - 1)
        for m in range(1, n):
            acc = mpmath.mpc(0)
            for i in range(1, m + 1):
                acc += self.coeffs[i] * out[m - i]
            out[m] = -acc / c0
        return ComplexSeries(self.center, out)

    def __truediv__(self, other):
        if not isinstance(other, ComplexSeries):
            return ComplexSeries(self.center, [c / other for c in self.coeffs])
        return self * self._match(other).invert()

    def exp(self) -> "ComplexSeries":
        n = len(self.coeffs)
        e0 = mpmath.exp(self.coeffs[0])
        out = [e0] + [mpmath.mpc(0)] * (n - 1)
        for m in range(1, n):
            acc = mpmath.mpc(0)
            for i in range(1, m + 1):
                acc += i * self.coeffs[i] * out[m - i]
            out[m] = acc / m
        return ComplexSeries(self.center, out)

    def log(self) -> "ComplexSeries":
        """Principal-branch log; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("log of a series with zero constant term")
        n = len(self.coeffs)
        u = [c / c0 for c in self.coeffs]
        out = [mpmath.log(c0)] + [mpmath.mpc(0)] * (n - 1)
        for m in range(1, n):
            acc = mpmath.mpc(0)
            for i in range(1, m):
                acc += i * out[i] * u[m - i]
            out[m] = u[m] - acc / m
        return ComplexSeries(self.center, out)

    def pow(self, tau) -> "ComplexSeries":
        """Principal-branch power series self**tau.

        Aborts if the constant term sits on the negative real axis, where
        the principal branch is discontinuous.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("pow of a series with zero constant term")
        if mpmath.im(c0) == 0 and mpmath.re(c0) < 0:
            raise ArithmeticError(
                "series constant term lies on the negative real axis; "
                "principal branch is ambiguous"
            )
        return (self.log() * tau).exp()

    def derivative(self) -> "ComplexSeries":
        n = len(self.coeffs)
        return ComplexSeries(
            self.center, [(i + 1) * self.coeffs[i + 1] for i in range(n - 1)]
        )

    def __call__(self, z):
        acc = mpmath.mpc(0)
        u = mpmath.mpc(z) - self.center
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def __repr__(self):
        return f"ComplexSeries(center={self.center}, n={len(self.coeffs)})"


def p_series_at(constants: SaddleConstants, order: int, dps: int):
    """Taylor coefficients of p(z) = (Li_2(e^z) - Li_2(1))/z about z0.

    Built from the ODE p'(z) = -(p(z) + log(1 - e^z))/z, seeded with
    p(z0) = -log(w0); returns a ComplexSeries of the given length.
    """
    with mpmath.mp.workdps(dps + 15):
        z0 = mpmath.mpc(constants.z0)
        w0 = mpmath.mpc(constants.w0)
        n = order
        # series of log(1 - e^z) about z0: log(w0) + log1p((w0 - e^z)/w0 - 1)...
        ez = _exp_series(z0, n)
        one_minus = ComplexSeries(z0, [1 - c if i == 0 else -c for i, c in enumerate(ez.coeffs)])
        ell = one_minus.log()
        p = [mpmath.mpc(0)] * n
        p[0] = -mpmath.log(w0)
        for m in range(n - 1):
            # z p'(z) + p(z) + ell(z) = 0, expanded about z0:
            # sum over (z-z0+z0) p' ...
            p[m + 1] = -(ell.coeffs[m] + p[m] + (m * p[m] if m else 0)) / (
                z0 * (m + 1)
            )
        return ComplexSeries(z0, p)


def _exp_series(center, length: int) -> ComplexSeries:
    e0 = mpmath.exp(center)
    coeffs = []
    f = mpmath.mpf(1)
    for j in range(length):
        if j:
            f /= j
        coeffs.append(e0 * f)
    return ComplexSeries(center, coeffs)
