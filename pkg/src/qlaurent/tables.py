"""Exact integer/rational sequences: Bernoulli and Norlund numbers,
Stirling subset numbers, twisted Bernoulli sums at roots of unity,
Eulerian polynomials, and partition counters."""

from __future__ import annotations

import math
from functools import lru_cache

from gmpy2 import mpq, mpz, bincoef, fac

from .cyclotomic import CyclotomicElement

_bernoulli_cache: list[mpq] = [mpq(1)]


def bernoulli(n: int) -> mpq:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
        acc = mpq(0)
        for j in range(m):
            if _bernoulli_cache[j]:
                acc += bincoef(m + 1, j) * _bernoulli_cache[j]
        _bernoulli_cache.append(-acc / bincoef(m + 1, m))
    return _bernoulli_cache[n]


@lru_cache(maxsize=None)
def stirling2(n: int, j: int) -> mpz:
    """Stirling subset number {n over j}."""
    if j < 0 or j > n:
        return mpz(0)
    if n == 0:
        return mpz(1) if j == 0 else mpz(0)
    return j * stirling2(n - 1, j) + stirling2(n - 1, j - 1)


def _gen_binom(top: mpq, j: int) -> mpq:
    out = mpq(1)
    for i in range(j):
        out *= (top - i) / (i + 1)
    return out


def norlund(n: int, alpha) -> mpq:
    """Norlund number B_n^(alpha): n! [z^n] (z/(e^z-1))**alpha."""
    if n < 0:
        raise ValueError("n must be >= 0")
    alpha = mpq(alpha)
    acc = mpq(0)
    for j in range(n + 1):
        s = stirling2(n + j, j)
        if not s:
            continue
        term = (
            _gen_binom(alpha + n, n - j)
            * _gen_binom(alpha + j - 1, j)
            / bincoef(n + j, j)
            * s
        )
        acc += -term if j % 2 else term
    return acc


def bernoulli_poly(n: int, x) -> mpq:
    """Bernoulli polynomial B_n(x) for rational x."""
    x = mpq(x)
    acc = mpq(0)
    for j in range(n + 1):
        acc += bincoef(n, j) * bernoulli(j) * x ** (n - j)
    return acc


@lru_cache(maxsize=None)
def twisted_bernoulli(m: int, k: int, j: int) -> CyclotomicElement:
    """beta_m at the root of unity zeta_k**j, as an element of Q(zeta_k).

    For the trivial root this is the Bernoulli number B_m; otherwise it is
    k^(m-1) * sum_{r=1}^{k} B_m(r/k) * zeta^(j*r), and beta_0 vanishes.
    """
    j %= k
    if j == 0:
        return CyclotomicElement.from_rational(k, bernoulli(m))
    if m == 0:
        return CyclotomicElement.zero(k)
    d = k // math.gcd(j, k)  # exact order of the root zeta_k**j
    acc = CyclotomicElement.zero(k)
    for r in range(d):
        b = bernoulli_poly(m, mpq(r, d))
        if b:
            acc = acc + b * CyclotomicElement.root(k, j * r)
    return mpq(d) ** (m - 1) * acc


@lru_cache(maxsize=None)
def eulerian_poly(m: int) -> tuple[mpz, ...]:
    """Coefficients of the m-th Eulerian polynomial, ascending in w."""
    if m == 0:
        return (mpz(1),)
    prev = eulerian_poly(m - 1)
    out = [mpz(0)] * max(m, 1)
    for i in range(len(prev)):
        # A(m, i) = (i+1) A(m-1, i) + (m-i) A(m-1, i-1)
        out[i] += (i + 1) * prev[i]
        if i + 1 < len(out):
            out[i + 1] += (m - (i + 1)) * prev[i]
    return tuple(out)


def power_sum_by_residue(k: int, N: int, n_max: int) -> list[list[mpz]]:
    """T[n][r] = sum of j**n over 1 <= j <= N with j = r (mod k), n = 0..n_max."""
    T = [[mpz(0)] * k for _ in range(n_max + 1)]
    for j in range(1, N + 1):
        r = j % k
        p = mpz(1)
        for n in range(n_max + 1):
            T[n][r] += p
            p *= j
    return T


@lru_cache(maxsize=None)
def _restricted_row(N: int, n_max: int) -> tuple[mpz, ...]:
    dp = [mpz(0)] * (n_max + 1)
    dp[0] = mpz(1)
    for part in range(1, N + 1):
        for n in range(part, n_max + 1):
            dp[n] += dp[n - part]
    return tuple(dp)


def restricted_p(N: int, n: int) -> mpz:
    """Number of partitions of n into at most N parts."""
    if n < 0:
        return mpz(0)
    if N <= 0:
        return mpz(1) if n == 0 else mpz(0)
    return _restricted_row(N, n)[n]


_pentagonal_cache: list[mpz] = [mpz(1)]


def unrestricted_p(n: int) -> mpz:
    """Partition numbers p(n) via the pentagonal-number recurrence."""
    if n < 0:
        return mpz(0)
    while len(_pentagonal_cache) <= n:
        m = len(_pentagonal_cache)
        acc = mpz(0)
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            acc += sign * _pentagonal_cache[m - g1]
            if g2 <= m:
                acc += sign * _pentagonal_cache[m - g2]
            j += 1
        _pentagonal_cache.append(acc)
    return _pentagonal_cache[n]


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
