"""Exact arithmetic in cyclotomic number fields Q(zeta_k).

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(k)-1) with
rational (gmpy2.mpq) coordinates, reduced modulo the k-th cyclotomic
polynomial.  Reduction to the power basis makes equality testing canonical.
"""

from __future__ import annotations

from functools import lru_cache

import gmpy2
from gmpy2 import mpq

Q = mpq


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    result = k
    n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dlead = den[-1]
    dn, dd = len(num) - 1, len(den) - 1
    quot = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c, rem = divmod(num[i + dd], dlead)
        if rem:
            raise ArithmeticError("non-exact polynomial division")
        quot[i] = c
        for j in range(dd + 1):
            num[i + j] -= c * den[j]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of the k-th cyclotomic polynomial, ascending, monic."""
    if k == 1:
        return (-1, 1)
    num = [0] * (k + 1)
    num[0], num[k] = -1, 1
    for d in range(1, k):
        if k % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
            if rem != [0]:
                raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(num)


@lru_cache(maxsize=None)
def _power_basis_table(k: int) -> tuple[tuple[mpq, ...], ...]:
    """zeta^t on the power basis for t = 0..k-1."""
    phi = euler_phi(k)
    poly = cyclotomic_polynomial(k)
    rows = []
    cur = [mpq(0)] * phi
    cur[0] = mpq(1)
    rows.append(tuple(cur))
    for _ in range(1, k):
        nxt = [mpq(0)] + cur[: phi - 1]
        top = cur[phi - 1]
        if top:
            for j in range(phi):
                nxt[j] -= top * poly[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_poly(k: int, coeffs: list[mpq]) -> tuple[mpq, ...]:
    """Reduce a polynomial in zeta of any degree onto the power basis."""
    phi = euler_phi(k)
    table = _power_basis_table(k)
    out = [mpq(0)] * phi
    for t, c in enumerate(coeffs):
        if not c:
            continue
        row = table[t % k]
        for j in range(phi):
            if row[j]:
                out[j] += c * row[j]
    return tuple(out)


def _poly_ext_inverse(a: list[mpq], mod: list[mpq]) -> list[mpq]:
    """Inverse of a modulo mod over Q, via the extended Euclidean algorithm."""

    def degree(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def pdivmod(n, d):
        n = list(n)
        dd = degree(d)
        qout = [mpq(0)] * (max(degree(n) - dd, 0) + 1)
        while degree(n) >= dd:
            dn = degree(n)
            c = n[dn] / d[dd]
            qout[dn - dd] = c
            for j in range(dd + 1):
                n[dn - dd + j] -= c * d[j]
            n[dn] = mpq(0)
        return qout, n

    r0, r1 = list(mod), list(a)
    s0, s1 = [mpq(0)], [mpq(1)]
    while degree(r1) > 0:
        quot, rem = pdivmod(r0, r1)
        r0, r1 = r1, rem
        # s_new = s0 - quot * s1
        prod = [mpq(0)] * (degree(quot) + degree(s1) + 2 if degree(s1) >= 0 else 1)
        for i, qc in enumerate(quot):
            if not qc:
                continue
            for j, sc in enumerate(s1):
                if sc:
                    prod[i + j] += qc * sc
        new = [mpq(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new[i] += c
        for i, c in enumerate(prod):
            new[i] -= c
        s0, s1 = s1, new
    if degree(r1) < 0:
        raise ZeroDivisionError("element is not invertible")
    lead = r1[degree(r1)]
    return [c / lead for c in s1]


class CyclotomicElement:
    """An element of Q(zeta_k) on the canonical power basis."""

    __slots__ = ("k", "coords")

    def __init__(self, k: int, coords):
        phi = euler_phi(k)
        coords = tuple(mpq(c) for c in coords)
        if len(coords) != phi:
            raise ValueError(f"expected {phi} coordinates for k={k}")
        self.k = k
        self.coords = coords

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(k: int, value) -> "CyclotomicElement":
        phi = euler_phi(k)
        coords = [mpq(value)] + [mpq(0)] * (phi - 1)
        return CyclotomicElement(k, coords)

    @staticmethod
    def zero(k: int) -> "CyclotomicElement":
        return CyclotomicElement.from_rational(k, 0)

    @staticmethod
    def one(k: int) -> "CyclotomicElement":
        return CyclotomicElement.from_rational(k, 1)

    @staticmethod
    def root(k: int, power: int = 1) -> "CyclotomicElement":
        """zeta_k**power as an element of Q(zeta_k)."""
        return CyclotomicElement(k, _power_basis_table(k)[power % k])

    # -- ring operations ----------------------------------------------

    def _check(self, other):
        if self.k != other.k:
            raise ValueError("mixed cyclotomic fields")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CyclotomicElement(
            self.k, [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CyclotomicElement(
            self.k, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self):
        return CyclotomicElement(self.k, [-a for a in self.coords])

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        a, b = self.coords, other.coords
        phi = len(a)
        conv = [mpq(0)] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        if phi == 1:
            return CyclotomicElement(self.k, conv)
        table = _power_basis_table(self.k)
        out = list(conv[:phi])
        for t in range(phi, 2 * phi - 1):
            c = conv[t]
            if not c:
                continue
            row = table[t % self.k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
        return CyclotomicElement(self.k, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            return other
        if isinstance(other, (int, mpq, type(gmpy2.mpz(0)))):
            return CyclotomicElement.from_rational(self.k, other)
        return NotImplemented

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_k)")
        if self.k == 1 or euler_phi(self.k) == 1:
            return CyclotomicElement(self.k, [1 / self.coords[0]])
        poly = [mpq(c) for c in cyclotomic_polynomial(self.k)]
        inv = _poly_ext_inverse(list(self.coords), poly)
        inv = (inv + [mpq(0)] * euler_phi(self.k))[: euler_phi(self.k)]
        return CyclotomicElement(self.k, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicElement.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            other = CyclotomicElement.from_rational(self.k, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.k == other.k and self.coords == other.coords

    def __hash__(self):
        return hash((self.k, self.coords))

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def is_rational(self) -> bool:
        return all(not c for c in self.coords[1:])

    def rational_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"element is not rational: {self}")
        return self.coords[0]

    def galois(self, h: int) -> "CyclotomicElement":
        """Apply the field automorphism zeta -> zeta**h (h coprime to k)."""
        import math

        if math.gcd(h, self.k) != 1:
            raise ValueError("h must be coprime to k")
        k = self.k
        lifted = [mpq(0)] * k
        for i, c in enumerate(self.coords):
            if c:
                lifted[(i * h) % k] += c
        return CyclotomicElement(k, _reduce_poly(k, lifted))

    def conjugate(self) -> "CyclotomicElement":
        return self.galois(self.k - 1) if self.k > 1 else self

    def embed(self, dps: int, h: int = 1):
        """Numerical value with zeta mapped to exp(2*pi*i*h/k)."""
        import mpmath

        with mpmath.mp.workdps(dps + 10):
            zeta = mpmath.expjpi(mpmath.mpf(2 * h) / self.k)
            acc = mpmath.mpc(0)
            zp = mpmath.mpc(1)
            for c in self.coords:
                if c:
                    acc += mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) * zp
                zp *= zeta
            return +acc

    def __repr__(self):
        if self.is_rational():
            return f"CyclotomicElement({self.k}, {self.coords[0]})"
        return f"CyclotomicElement(k={self.k}, coords={[str(c) for c in self.coords]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        return "[" + ", ".join(str(c) for c in self.coords) + "]"
