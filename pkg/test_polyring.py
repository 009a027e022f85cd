import pytest
from hypothesis import given, strategies as st

from cyclotomic import CycNum, OrderMismatch, root_of_unity
from polyring import (
    ORIGIN,
    NotUnitalRoots,
    Poly,
    RootSpec,
    ZeroPolynomial,
    all_keys,
    from_factored,
    key_name,
    parse_key_name,
    peel_roots,
    point,
)


@st.composite
def root_specs(draw, n, max_total=None):
    max_total = 3 * n if max_total is None else max_total
    keys = draw(st.lists(st.sampled_from(all_keys(n)), unique=True, max_size=n + 1))
    exps = {}
    total = 0
    for k in keys:
        e = draw(st.integers(min_value=1, max_value=3))
        if total + e > max_total:
            break
        exps[k] = e
        total += e
    return RootSpec.from_dict(n, exps)


def test_ring_examples():
    x = Poly.x(1)
    assert (x - Poly.constant(1, 1)) * (x + Poly.constant(1, 1)) == Poly.make(1, [-1, 0, 1])
    i = root_of_unity(4, 1)
    x4 = Poly.x(4)
    assert (x4 - Poly.constant(4, i)) * (x4 + Poly.constant(4, i)) == Poly.make(4, [1, 0, 1])


def test_evaluate_phi3_at_u():
    p = Poly.make(3, [1, 1, 1])
    assert p.evaluate(root_of_unity(3, 1)).is_zero()


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        Poly.x(3) + Poly.x(4)


def test_from_factored_examples():
    assert from_factored(RootSpec(3, ((1, 1), (2, 1)))) == Poly.make(3, [1, 1, 1])
    assert from_factored(RootSpec(1, ((0, 2),))) == Poly.make(1, [1, -2, 1])
    i = root_of_unity(4, 1)
    assert from_factored(RootSpec(4, ((ORIGIN, 1), (1, 1)))) == Poly.make(4, [0, -i, 1])
    assert from_factored(RootSpec(5)) == Poly.constant(5, 1)


def test_peel_examples():
    spec, constant = peel_roots(Poly.make(3, [1, 1, 1]))
    assert spec == RootSpec(3, ((1, 1), (2, 1)))
    assert constant.is_one()
    spec, constant = peel_roots(Poly.make(1, [1, -2, 1]))
    assert spec.as_dict() == {0: 2}
    spec, constant = peel_roots(Poly.make(4, [0, 0, 3]))
    assert spec.as_dict() == {ORIGIN: 2}
    assert constant == CycNum.from_rational(4, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_peel_rejects_golden_ratio_factor(n):
    with pytest.raises(NotUnitalRoots):
        peel_roots(Poly.make(n, [-1, 1, 1]))


def test_peel_zero_raises():
    with pytest.raises(ZeroPolynomial):
        peel_roots(Poly.zero(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_peel_inverts_from_factored(n):
    @given(root_specs(n))
    def check(spec):
        assert peel_roots(from_factored(spec)) == (spec, CycNum.one(n))
        assert from_factored(spec).degree == spec.degree

    check()


@given(root_specs(4, max_total=8), st.integers(min_value=0, max_value=5))
def test_merge_is_product(spec, cut):
    a = RootSpec(4, spec.exps[:cut])
    b = RootSpec(4, spec.exps[cut:])
    assert from_factored(a.merge(b)) == from_factored(a) * from_factored(b)


@given(root_specs(3))
def test_evaluate_vanishes_exactly_on_keys(spec):
    p = from_factored(spec)
    for k in all_keys(3):
        assert p.evaluate(point(3, k)).is_zero() == (k in spec.keys)


def test_divide_linear():
    p = Poly.make(2, [-1, 0, 1])
    quotient, remainder = p.divide_linear(1)
    assert quotient == Poly.make(2, [-1, 1])
    assert remainder.is_zero()
    quotient, remainder = p.divide_linear(ORIGIN)
    assert remainder == CycNum.from_rational(2, -1)


def test_key_names():
    assert key_name(ORIGIN) == "origin"
    assert key_name(3) == "root:3"
    assert parse_key_name("root:3", 4) == 3
    assert parse_key_name("origin", 4) == ORIGIN
    with pytest.raises(ValueError):
        parse_key_name("root:4", 4)


def test_root_spec_validation():
    with pytest.raises(ValueError):
        RootSpec(3, ((1, 0),))
    with pytest.raises(ValueError):
        RootSpec(3, ((2, 1), (1, 1)))
    with pytest.raises(ValueError):
        RootSpec(3, ((1, 1),)).merge(RootSpec(3, ((1, 2),)))


def test_zero_polynomial_degree():
    assert Poly.zero(3).degree == -1
    assert Poly.make(3, [0, 0]).is_zero()
