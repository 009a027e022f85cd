import pytest

from cyclotomic import CycNum, root_of_unity
from formula import FormulaError, parse_function, parse_rational, parse_value
from polyring import ORIGIN, Poly
from unital import P1Value


def test_parse_rational_keeps_unreduced_quotient():
    numerator, denominator = parse_rational("x/(x+1) + 1", 2)
    assert numerator == Poly.make(2, [1, 2])
    assert denominator == Poly.make(2, [1, 1])


def test_parse_function_cancels_common_factors():
    f = parse_function("x*(x-1)/((x-1)*(x+1))", 2)
    assert dict(f.exps) == {ORIGIN: 1, 1: -1}
    assert f.constant.is_one()


def test_parse_function_absorbs_units():
    f = parse_function("i*(x+1)/(-(x-1))", 4)
    assert f.constant == -root_of_unity(4, 1)
    assert dict(f.exps) == {0: -1, 2: 1}


def test_names_need_matching_order():
    assert parse_value("u", 6) == P1Value.finite(root_of_unity(6, 2))
    assert parse_value("ub", 3) == P1Value.finite(root_of_unity(3, 2))
    assert parse_value("w", 4) == P1Value.finite(1 - root_of_unity(4, 1))
    with pytest.raises(FormulaError):
        parse_value("i", 3)
    with pytest.raises(FormulaError):
        parse_value("u", 4)


def test_negative_exponents():
    assert parse_function("x**-2", 1) == parse_function("1/x**2", 1)


def test_parse_value():
    assert parse_value("inf", 2).is_infinite
    assert parse_value("(1+i)/2", 4) == P1Value.finite((1 + root_of_unity(4, 1)) / 2)
    assert parse_value("0", 3) == P1Value.finite(CycNum.zero(3))
    with pytest.raises(FormulaError):
        parse_value("x+1", 2)


@pytest.mark.parametrize("text", ["", "x +", "x^2", "2.5*x", "x**y", "foo(x)", "x/0"])
def test_invalid_formulas(text):
    with pytest.raises(FormulaError):
        parse_function(text, 4)


def test_factor_outside_gamma_rejected():
    with pytest.raises(FormulaError):
        parse_function("x**2+x-1", 4)


def test_constant_rejected():
    with pytest.raises(FormulaError):
        parse_function("x/x", 2)
