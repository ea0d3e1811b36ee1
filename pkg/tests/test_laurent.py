"""Exact truncated Laurent series arithmetic."""

import itertools

import pytest
from gmpy2 import mpq

from qlaurent.laurent import ExactLaurentSeries


def _series(vals, valuation=0, order=None, k=1):
    if order is None:
        order = valuation + len(vals)
    return ExactLaurentSeries(k, valuation, vals, order)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_mul_trivial():
    a = _series([1, 1], order=3)
    b = _series([1, -1], order=3)
    p = a * b
    assert p.coefficient(0).rational_value() == 1
    assert p.coefficient(1).is_zero()
    assert p.coefficient(2).rational_value() == -1


def test_valuation_additivity():
    a = _series([1, 2], valuation=-1, order=4)
    b = _series([3], valuation=-2, order=4)
    assert (a * b).valuation == -3


def test_invert_one_minus_exp():
    # 1 - e^z = -z - z^2/2 - z^3/6 - ...; its reciprocal starts
    # -1/z + 1/2 - z/12 + ...
    order = 6
    s = _series(
        [mpq(-1, _factorial(n)) for n in range(1, order + 2)], valuation=1, order=order
    )
    t = s.invert()
    assert t.valuation == -1
    assert t.coefficient(-1).rational_value() == -1
    assert t.coefficient(0).rational_value() == mpq(1, 2)
    assert t.coefficient(1).rational_value() == mpq(-1, 12)
    prod = s * t
    assert prod.coefficient(0).rational_value() == 1
    for e in range(1, prod.order):
        assert prod.coefficient(e).is_zero()


def test_invert_zero_series_rejected():
    with pytest.raises(ZeroDivisionError):
        ExactLaurentSeries.zero(1, 5).invert()


def test_exp_anchors():
    z = _series([1], valuation=1, order=5)
    e = z.exp()
    assert [e.coefficient(i).rational_value() for i in range(5)] == [
        1,
        1,
        mpq(1, 2),
        mpq(1, 6),
        mpq(1, 24),
    ]
    zz = _series([1, 1], valuation=1, order=4)
    assert zz.exp().coefficient(3).rational_value() == mpq(7, 6)


def test_exp_requires_positive_valuation():
    with pytest.raises(ValueError):
        _series([1, 1], valuation=0, order=4).exp()


def test_exp_matches_multinomial_enumeration():
    # coefficient of z^M in exp(sum c_n z^n) equals the sum over
    # compositions 1*j1 + 2*j2 + ... = M of prod c_n^(j_n) / j_n!
    cs = [mpq(2, 3), mpq(-1, 2), mpq(5, 7), mpq(1, 4), mpq(-3, 5), mpq(1, 6), mpq(2), mpq(-1, 3)]
    M = 8
    s = _series(cs, valuation=1, order=M + 1)
    got = s.exp().coefficient(M).rational_value()
    total = mpq(0)
    ranges = [range(M // n + 1) for n in range(1, M + 1)]
    for js in itertools.product(*ranges):
        if sum((n + 1) * j for n, j in enumerate(js)) != M:
            continue
        term = mpq(1)
        for n, j in enumerate(js):
            term *= cs[n] ** j / _factorial(j)
        total += term
    assert got == total


def test_log_exp_roundtrip():
    s = _series([mpq(1, 3), mpq(-2, 5), mpq(1, 7)], valuation=1, order=5)
    back = s.exp().log()
    for e in range(back.valuation, back.order):
        assert back.coefficient(e) == s.coefficient(e)


def test_coefficient_access_rules():
    s = _series([1], valuation=2, order=4)
    assert s.coefficient(0).is_zero()  # below valuation: exact zero
    with pytest.raises(ValueError):
        s.coefficient(4)  # at or past the truncation order: unknown
