import pytest

from hopfext.core.errors import ParseError
from hopfext.services.algebra.parser import ExpressionParser


@pytest.fixture
def parser(f3):
    return ExpressionParser(f3, ["x", "y"], scalars={"q": 2})


def test_parse_relation(parser):
    poly = parser.parse("y*x - x*y + 1/2*x^2")
    assert poly.terms == {(1, 0): 1, (0, 1): 2, (0, 0): 2}


def test_scalars_and_parentheses(parser):
    poly = parser.parse("(x + q*y)^2")
    assert poly.terms == {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 1}


def test_parse_tensor(parser):
    t = parser.parse_tensor("x ⊗ 1 + y (x) x - 2*1 ⊗ y")
    assert t == {((0,), ()): 1, ((1,), (0,)): 1, ((), (1,)): 1}


def test_unknown_symbol_reports_column(parser):
    with pytest.raises(ParseError) as exc:
        parser.parse("x*z", line=4)
    assert exc.value.line == 4
    assert exc.value.column == 3


def test_division_by_letter_rejected(parser):
    with pytest.raises(ParseError):
        parser.parse("x/y")
