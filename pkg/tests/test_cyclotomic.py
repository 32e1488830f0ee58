"""Exact cyclotomic scalar arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anyonqpg.cyclotomic import (
    CycScalar,
    cyclotomic_polynomial,
    field_degree,
    power_reduction,
)

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


def scalars(order):
    return st.lists(
        rationals, min_size=field_degree(order), max_size=field_degree(order)
    ).map(lambda c: CycScalar(order, c))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert field_degree(8) == 4
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_reduction_examples():
    # w^2 at N=3 reduces to -1 - w
    assert CycScalar(3, [0, 0, 1]).coeffs == (Fraction(-1), Fraction(-1))
    # primitive square root of unity is -1
    assert CycScalar(2, [0, 1]) == -1
    # 1 + w^2 vanishes at N=4
    assert CycScalar(4, [1, 0, 1, 0]).is_zero()


def test_root_powers_wrap():
    for n in (2, 3, 4, 5, 8):
        w = CycScalar.root_of_unity(n)
        acc = CycScalar.one(n)
        for _ in range(n):
            acc = acc * w
        assert acc == 1
        assert CycScalar.root_of_unity(n, n + 2) == CycScalar.root_of_unity(n, 2)


def test_conjugation_examples():
    w5 = CycScalar.root_of_unity(5)
    assert w5.conjugate() == CycScalar(5, [0, 0, 0, 0, 1])
    assert (w5 * w5.conjugate()) == 1
    for n in (3, 4, 7):
        w = CycScalar.root_of_unity(n, 2)
        assert w.conjugate().conjugate() == w


def test_inverse():
    a = CycScalar(5, [1, 2, Fraction(1, 3), 0])
    assert a * a.inverse() == 1
    assert CycScalar.from_rational(4, Fraction(1, 4)).inverse() == 4
    with pytest.raises(ZeroDivisionError):
        CycScalar.zero(3).inverse()


def test_fourier_orthogonality():
    for n in range(2, 9):
        for t in range(n):
            total = CycScalar.zero(n)
            for s in range(n):
                total = total + CycScalar.root_of_unity(n, s * t)
            assert total == (n if t == 0 else 0)


def test_delta_from_grading_sum():
    # (1/N) sum_s w^(-st) z^s at z = w^m picks out [m == t]
    n = 5
    for t in range(n):
        for m in range(n):
            total = CycScalar.zero(n)
            for s in range(n):
                total = total + CycScalar.root_of_unity(n, -s * t + s * m)
            assert total * Fraction(1, n) == (1 if m == t else 0)


def test_to_complex():
    i_val = CycScalar.root_of_unity(4).to_complex(precision=20)
    assert abs(complex(i_val) - 1j) < 1e-19
    z = CycScalar(3, [Fraction(1, 3), Fraction(1, 3)]) + CycScalar(3, [0, 0, Fraction(1, 3)])
    assert abs(complex(z.to_complex())) < 1e-14
    w3 = complex(CycScalar.root_of_unity(3).to_complex())
    assert abs(w3 - complex(-0.5, 0.8660254037844386)) < 1e-12
    with pytest.raises(ValueError):
        CycScalar.one(3).to_complex(precision=0)


def test_json_round_trip():
    a = CycScalar(12, [Fraction(-7, 3), 2, 0, Fraction(5, 11)])
    assert CycScalar.from_json(a.to_json()) == a
    assert a.to_json()["coeffs"][0] == "-7/3"
    with pytest.raises(ValueError):
        CycScalar.from_json({"N": 12, "coeffs": ["1/1"]})


def test_power_reduction_matches_polynomial_division():
    for n in (3, 4, 6, 8):
        phi = field_degree(n)
        for m in range(phi, n):
            vec = power_reduction(n, m)
            rebuilt = CycScalar(n, [0] * m + [1])
            assert rebuilt.coeffs == tuple(Fraction(c) for c in vec)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(scalars(n), scalars(n), scalars(n))))
def test_ring_laws(triple):
    a, b, c = triple
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == CycScalar.zero(a.order)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(scalars(n), scalars(n))))
def test_conjugation_distributes(pair):
    a, b = pair
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(scalars(n), scalars(n))))
def test_complex_evaluation_is_homomorphic(pair):
    a, b = pair
    assert abs((a * b).approx() - a.approx() * b.approx()) < 1e-8
    assert abs((a + b).approx() - (a.approx() + b.approx())) < 1e-8


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7).flatmap(scalars))
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert a.inverse().inverse() == a
