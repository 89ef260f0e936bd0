"""Polynomials over GF(2)[U] represented by exponent sets."""

from hypothesis import given, strategies as st

from hfi.upoly import UPoly

polys = st.frozensets(st.integers(0, 12), max_size=6).map(UPoly)


def test_zero_one():
    assert not UPoly.zero()
    assert UPoly.one()
    assert UPoly.one() * UPoly.one() == UPoly.one()


def test_addition_is_cancellation():
    p = UPoly.of(0, 2)
    assert p + p == UPoly.zero()
    assert p + UPoly.of(2) == UPoly.of(0)


def test_multiplication_convolves():
    # (1 + U) * (1 + U) = 1 + U^2 over GF(2)
    p = UPoly.of(0, 1)
    assert p * p == UPoly.of(0, 2)


def test_shift_and_truncate():
    p = UPoly.of(0, 3)
    assert p.shift(2) == UPoly.of(2, 5)
    assert p.truncate(3) == UPoly.of(0)
    assert p.truncate(4) == p


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys, polys)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_multiplication_commutes(p, q):
    assert p * q == q * p


@given(polys)
def test_one_is_unit(p):
    assert p * UPoly.one() == p
