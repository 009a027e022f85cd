import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclotomic import (
    CycNum,
    DivisionByZero,
    NotCoprime,
    NotDivisible,
    OrderMismatch,
    cyclo_poly,
    embed,
    euler_phi,
    galois,
    galois_exponents,
    norm,
    ord_p,
    root_of_unity,
)

ORDERS = range(1, 7)
SAMPLES = 1000


def random_element(rng, n, nonzero=False):
    while True:
        coeffs = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(euler_phi(n)))
        a = CycNum(n, coeffs)
        if not (nonzero and a.is_zero()):
            return a


@st.composite
def elements(draw, n, nonzero=False):
    coeffs = draw(st.lists(
        st.fractions(min_value=-20, max_value=20, max_denominator=12),
        min_size=euler_phi(n), max_size=euler_phi(n),
    ))
    a = CycNum(n, tuple(coeffs))
    if nonzero and a.is_zero():
        a = a + 1
    return a


def test_cyclo_poly_examples():
    assert cyclo_poly(1) == (-1, 1)
    assert cyclo_poly(3) == (1, 1, 1)
    assert cyclo_poly(4) == (1, 0, 1)
    assert cyclo_poly(6) == (1, -1, 1)
    for n in range(1, 13):
        assert len(cyclo_poly(n)) - 1 == euler_phi(n)


def test_conjugate_roots_multiply_to_one():
    u = root_of_unity(3, 1)
    ub = root_of_unity(3, 2)
    assert u * ub == CycNum.one(3)


def test_one_plus_i_times_one_minus_i():
    i = root_of_unity(4, 1)
    assert (1 + i) * (1 - i) == CycNum.from_rational(4, 2)


def test_inverse_of_one_minus_u():
    u = root_of_unity(3, 1)
    assert (1 - u).inverse() == CycNum.from_coeffs(3, [Fraction(2, 3), Fraction(1, 3)])


def test_root_of_unity_examples():
    assert root_of_unity(4, 1) == CycNum.from_coeffs(4, [0, 1])
    assert root_of_unity(4, 2) == CycNum.from_rational(4, -1)
    assert root_of_unity(3, 2) == CycNum.from_coeffs(3, [-1, -1])
    assert root_of_unity(5, 7) == root_of_unity(5, 2)
    assert root_of_unity(6, -1) == root_of_unity(6, 5)


def test_invert_zero_raises():
    with pytest.raises(DivisionByZero):
        CycNum.zero(4).inverse()
    with pytest.raises(ZeroDivisionError):
        CycNum.one(3) / CycNum.zero(3)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        CycNum.one(3) + CycNum.one(4)


@pytest.mark.parametrize("n", ORDERS)
def test_field_axioms_random(n):
    rng = random.Random(1000 + n)
    one = CycNum.one(n)
    for _ in range(SAMPLES):
        a = random_element(rng, n, nonzero=True)
        b = random_element(rng, n)
        c = random_element(rng, n)
        assert a * a.inverse() == one
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert (a + b) - b == a


@pytest.mark.parametrize("n", ORDERS)
def test_galois_homomorphism_random(n):
    rng = random.Random(2000 + n)
    for _ in range(SAMPLES):
        a = random_element(rng, n)
        b = random_element(rng, n)
        k = rng.choice(galois_exponents(n))
        assert galois(a + b, k) == galois(a, k) + galois(b, k)
        assert galois(a * b, k) == galois(a, k) * galois(b, k)


@pytest.mark.parametrize("n", ORDERS)
def test_norm_multiplicative_random(n):
    rng = random.Random(3000 + n)
    for _ in range(SAMPLES):
        a = random_element(rng, n)
        b = random_element(rng, n)
        assert norm(a * b) == norm(a) * norm(b)


@pytest.mark.parametrize("n", ORDERS)
def test_ord_p_additive_random(n):
    rng = random.Random(4000 + n)
    for _ in range(SAMPLES):
        a = random_element(rng, n, nonzero=True)
        b = random_element(rng, n, nonzero=True)
        for p in (2, 3, 5):
            assert ord_p(a * b, p) == ord_p(a, p) + ord_p(b, p)


@pytest.mark.parametrize("n", ORDERS)
def test_embed_into_double_order_random(n):
    rng = random.Random(5000 + n)
    target = 2 * n
    for _ in range(SAMPLES):
        a = random_element(rng, n)
        b = random_element(rng, n)
        assert embed(a + b, target) == embed(a, target) + embed(b, target)
        assert embed(a * b, target) == embed(a, target) * embed(b, target)
        if a != b:
            assert embed(a, target) != embed(b, target)


@given(elements(5), elements(5))
def test_galois_composition(a, b):
    assert galois(galois(a, 2), 3) == galois(a, 6 % 5)
    assert galois(a * b, 4) == galois(a, 4) * galois(b, 4)


@given(elements(6, nonzero=True))
def test_division_inverts_multiplication(a):
    b = root_of_unity(6, 1) + 2
    assert (a * b) / b == a


@given(elements(4))
def test_json_round_trip(a):
    assert CycNum.from_json(a.to_json()) == a


def test_galois_examples():
    i = root_of_unity(4, 1)
    u = root_of_unity(3, 1)
    assert galois(1 + i, 3) == 1 - i
    assert galois(u, 2) == root_of_unity(3, 2)
    assert galois(u, 1) == u
    with pytest.raises(NotCoprime):
        galois(i, 2)


def test_embed_examples():
    assert embed(root_of_unity(2, 1), 4) == root_of_unity(4, 2)
    assert embed(CycNum.one(1), 6) == CycNum.one(6)
    with pytest.raises(NotDivisible):
        embed(root_of_unity(4, 1), 3)


def test_norm_examples():
    i = root_of_unity(4, 1)
    u = root_of_unity(3, 1)
    assert norm(1 + i) == 2
    assert norm(1 - u) == 3
    assert norm(CycNum.zero(5)) == 0


def test_ord_p_examples():
    i = root_of_unity(4, 1)
    u = root_of_unity(3, 1)
    assert ord_p(1 + i, 2).value == Fraction(1, 2)
    assert ord_p(CycNum.from_rational(4, 2), 2).value == 1
    assert ord_p(1 - u, 3).value == Fraction(1, 2)
    assert ord_p(CycNum.zero(4), 2).is_infinite
    with pytest.raises(ValueError):
        ord_p(1 + i, 4)


def test_rendering():
    assert str(root_of_unity(4, 1) + 1) == "1+z"
    assert str(CycNum.zero(3)) == "0"
    assert str(CycNum.from_coeffs(3, [0, 0, Fraction(-1, 2)])) == "1/2+1/2*z"
