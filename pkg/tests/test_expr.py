from fractions import Fraction

import pytest

from hypergerm.errors import NonPositiveBase, NotationError
from hypergerm.expr import Add, Const, Div, Mul, Neg, PowBase, Power, Sub, Var, parse_expr
from hypergerm.germ import H, parse_germ, pow_base


def test_precedence_and_associativity():
    assert parse_expr("1 - 2 - 3") == Sub(Sub(Const(1), Const(2)), Const(3))
    assert parse_expr("1 + 2*H^2") == Add(Const(1), Mul(Const(2), Power(Var(), 2)))
    assert parse_expr("6/2/3") == Div(Div(Const(6), Const(2)), Const(3))
    assert parse_expr("-H") == Neg(Var())


@pytest.mark.parametrize("text,node", [
    ("pow(1/10, H)", PowBase(Fraction(1, 10), 1, 0)),
    ("pow(1/10,2*H)", PowBase(Fraction(1, 10), 2, 0)),
    ("pow(2, H-1)", PowBase(Fraction(2), 1, -1)),
    ("pow(2, 3H+4)", PowBase(Fraction(2), 3, 4)),
    ("pow(5, 3)", PowBase(Fraction(5), 0, 3)),
    ("pow(5, -3)", PowBase(Fraction(5), 0, -3)),
])
def test_pow_atom(text, node):
    assert parse_expr(text) == node


def test_sequence_variable():
    assert parse_expr("n + 1", var="n") == Add(Var(), Const(1))
    with pytest.raises(NotationError):
        parse_expr("H + 1", var="n")


@pytest.mark.parametrize("text,column", [
    ("", 0), ("1 +", 3), ("(H", 2), ("H ^ x", 4), ("2 $ 3", 2), ("pow(1/10 H)", 9), ("foo", 0),
])
def test_errors_report_position(text, column):
    with pytest.raises(NotationError) as info:
        parse_expr(text)
    assert info.value.position == column
    assert info.value.name == "SyntaxError"


def test_negative_base_is_a_domain_error():
    with pytest.raises(NonPositiveBase):
        parse_germ("pow(-2, H)")


def test_interpretation():
    assert parse_germ("pow(1/10,H)*10") == pow_base(Fraction(1, 10), (1, -1))
    assert parse_germ("H^-2") * H * H == 1
    assert parse_germ("0.25*4") == 1


def test_pow_accepts_signed_affine_exponents():
    from hypergerm.germ import parse_germ
    assert parse_germ("pow(2,-H)") == parse_germ("pow(1/2,H)")
    assert parse_germ("pow(10,-3)") == parse_germ("1/1000")
    assert parse_germ("pow(1/2,-2*H+1)") == parse_germ("1/2*pow(4,H)")
