import mpmath
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from qlaurent.cyclotomic import CyclotomicElement, cyclotomic_polynomial, euler_phi


def test_minimal_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_euler_phi():
    assert [euler_phi(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_root_order():
    z = CyclotomicElement.root(4)
    assert z * z == CyclotomicElement.from_rational(4, -1)
    assert z**4 == CyclotomicElement.one(4)
    # (1 + i)(1 - i) = 2
    one = CyclotomicElement.one(4)
    assert (one + z) * (one - z) == CyclotomicElement.from_rational(4, 2)


def test_mixed_conductors_rejected():
    with pytest.raises(ValueError):
        CyclotomicElement.one(3) + CyclotomicElement.one(4)


def _random_element(k, draw):
    phi = euler_phi(k)
    return CyclotomicElement(k, [mpq(draw[i], draw[i + phi] or 1) for i in range(phi)])


small_ints = st.lists(st.integers(-9, 9), min_size=8, max_size=8)


@settings(max_examples=60, deadline=None)
@given(small_ints, small_ints, small_ints)
def test_ring_axioms(a, b, c):
    k = 5
    x, y, z = (_random_element(k, v) for v in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x


@settings(max_examples=30, deadline=None)
@given(small_ints, small_ints)
def test_embedding_is_homomorphism(a, b):
    k = 5
    x, y = _random_element(k, a), _random_element(k, b)
    with mpmath.mp.workdps(55):
        lhs = (x * y).embed(50)
        rhs = x.embed(50) * y.embed(50)
        assert abs(lhs - rhs) <= mpmath.mpf(10) ** -45 * (1 + abs(rhs))


def test_inverse():
    z = CyclotomicElement.root(7, 3)
    x = CyclotomicElement.one(7) + z + z * z
    assert x * x.inverse() == CyclotomicElement.one(7)


def test_galois_and_conjugate():
    k = 12
    z = CyclotomicElement.root(k)
    x = z + z**5 * CyclotomicElement.from_rational(k, mpq(2, 3))
    assert x.galois(5) == z**5 + z * CyclotomicElement.from_rational(k, mpq(2, 3))
    with mpmath.mp.workdps(40):
        assert abs(x.conjugate().embed(30) - mpmath.conj(x.embed(30))) < mpmath.mpf(
            "1e-25"
        )


def test_canonical_equality_and_hash():
    k = 8
    z = CyclotomicElement.root(k)
    a = z**4
    assert a == CyclotomicElement.from_rational(k, -1)
    assert hash(a) == hash(CyclotomicElement.from_rational(k, -1))
