"""Truncated Laurent series with exact cyclotomic coefficients.

A series carries an explicit truncation order: coefficients are known for
exponents strictly below ``order`` and unknown at or beyond it.  The zero
series (all known coefficients vanish) is representable at any order, so
loss of significance is visible rather than silent.
"""

from __future__ import annotations

from gmpy2 import mpq

from .cyclotomic import CyclotomicElement


class ExactLaurentSeries:
    """sum_{e >= valuation} coeff[e - valuation] * t**e, known for e < order."""

    __slots__ = ("k", "valuation", "coeffs", "order")

    def __init__(self, k: int, valuation: int, coeffs, order: int):
        coeffs = [
            c if isinstance(c, CyclotomicElement) else CyclotomicElement.from_rational(k, c)
            for c in coeffs
        ]
        # trim leading zeros so the valuation is canonical
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            valuation += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if valuation + len(coeffs) > order:
            coeffs = coeffs[: order - valuation]
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        self.k = k
        self.order = order
        if not coeffs:
            self.valuation = order
            self.coeffs = []
        else:
            self.valuation = valuation
            self.coeffs = coeffs

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(k: int, order: int) -> "ExactLaurentSeries":
        return ExactLaurentSeries(k, order, [], order)

    @staticmethod
    def constant(k: int, value, order: int) -> "ExactLaurentSeries":
        return ExactLaurentSeries(k, 0, [value], order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> CyclotomicElement:
        if exponent >= self.order:
            raise ValueError(
                f"coefficient at t^{exponent} is beyond truncation order {self.order}"
            )
        idx = exponent - self.valuation
        if idx < 0 or idx >= len(self.coeffs):
            return CyclotomicElement.zero(self.k)
        return self.coeffs[idx]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "ExactLaurentSeries") -> "ExactLaurentSeries":
        if self.k != other.k:
            raise ValueError("mixed coefficient fields")
        order = min(self.order, other.order)
        if self.is_zero():
            lo = other.valuation
        elif other.is_zero():
            lo = self.valuation
        else:
            lo = min(self.valuation, other.valuation)
        lo = min(lo, order)
        out = []
        for e in range(lo, order):
            out.append(self.coefficient(e) + other.coefficient(e))
        return ExactLaurentSeries(self.k, lo, out, order)

    def __neg__(self) -> "ExactLaurentSeries":
        return ExactLaurentSeries(
            self.k, self.valuation, [-c for c in self.coeffs], self.order
        )

    def __sub__(self, other: "ExactLaurentSeries") -> "ExactLaurentSeries":
        return self + (-other)

    def __mul__(self, other: "ExactLaurentSeries") -> "ExactLaurentSeries":
        if self.k != other.k:
            raise ValueError("mixed coefficient fields")
        if self.is_zero() or other.is_zero():
            order = min(
                self.valuation + other.order, other.valuation + self.order
            )
            return ExactLaurentSeries.zero(self.k, order)
        order = min(self.valuation + other.order, other.valuation + self.order)
        lo = self.valuation + other.valuation
        n = order - lo
        out = [CyclotomicElement.zero(self.k) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ExactLaurentSeries(self.k, lo, out, order)

    def scale(self, factor) -> "ExactLaurentSeries":
        if not isinstance(factor, CyclotomicElement):
            factor = CyclotomicElement.from_rational(self.k, factor)
        return ExactLaurentSeries(
            self.k, self.valuation, [factor * c for c in self.coeffs], self.order
        )

    def shift(self, exponent: int) -> "ExactLaurentSeries":
        """Multiply by t**exponent."""
        return ExactLaurentSeries(
            self.k, self.valuation + exponent, list(self.coeffs), self.order + exponent
        )

    def invert(self) -> "ExactLaurentSeries":
        """Reciprocal series; requires a nonzero leading coefficient."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert a series that is zero to its order")
        v = self.valuation
        n = self.order - v  # relative coefficient count available
        lead = self.coeffs[0]
        lead_inv = lead.inverse()
        # u = self / (lead * t^v) has constant term 1
        u = [lead_inv * c for c in self.coeffs]
        u += [CyclotomicElement.zero(self.k)] * (n - len(u))
        inv = [CyclotomicElement.one(self.k)] + [
            CyclotomicElement.zero(self.k) for _ in range(n - 1)
        ]
        for m in range(1, n):
            acc = CyclotomicElement.zero(self.k)
            for i in range(1, m + 1):
                if not u[i].is_zero():
                    acc = acc + u[i] * inv[m - i]
            inv[m] = -acc
        out = [lead_inv * c for c in inv]
        return ExactLaurentSeries(self.k, -v, out, -v + n)

    def exp(self) -> "ExactLaurentSeries":
        """exp of a series with positive valuation."""
        if not self.is_zero() and self.valuation < 1:
            raise ValueError("exp requires valuation >= 1")
        n = self.order
        if n < 1:
            raise ValueError("order too small for exp")
        s = [self.coefficient(e) if 0 <= e < n else CyclotomicElement.zero(self.k)
             for e in range(n)]
        out = [CyclotomicElement.one(self.k)] + [
            CyclotomicElement.zero(self.k) for _ in range(n - 1)
        ]
        for m in range(1, n):
            acc = CyclotomicElement.zero(self.k)
            for i in range(1, m + 1):
                if not s[i].is_zero():
                    acc = acc + mpq(i) * s[i] * out[m - i]
            out[m] = mpq(1, m) * acc
        return ExactLaurentSeries(self.k, 0, out, n)

    def log(self) -> "ExactLaurentSeries":
        """log of a series with constant term 1."""
        if self.valuation != 0 or not (self.coeffs and self.coeffs[0] == 1):
            raise ValueError("log requires constant term 1")
        n = self.order
        s = [self.coefficient(e) for e in range(n)]
        out = [CyclotomicElement.zero(self.k) for _ in range(n)]
        for m in range(1, n):
            acc = CyclotomicElement.zero(self.k)
            for i in range(1, m):
                if not out[i].is_zero():
                    acc = acc + mpq(i) * out[i] * s[m - i]
            out[m] = s[m] - mpq(1, m) * acc
        return ExactLaurentSeries(self.k, 0, out, n)

    def __repr__(self):
        terms = ", ".join(
            f"t^{self.valuation + i}: {c}" for i, c in enumerate(self.coeffs) if not c.is_zero()
        )
        return f"ExactLaurentSeries(k={self.k}, order={self.order}, {{{terms}}})"
