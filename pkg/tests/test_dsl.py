import random

from conftest import random_expr
from fractions import Fraction

import pytest

from compact_lines.dsl import element_to_text, parse, parse_element, to_text
from compact_lines.errors import ParseError
from compact_lines.ordinals import OMEGA, OrdCode
from compact_lines.orders import Dup, Fin, Half, KurepaX, Left, LexQ, Omega, Rationals, Rev, Right, Sum, materialize
from compact_lines.points import YPoint, vec


def test_parse_examples():
    assert parse("sum(omega, fin(3))") == Sum(Omega(), Fin(3))
    assert parse("kurepa(w.5; w.1, w.3)") == KurepaX(OrdCode(5, 0), {OMEGA, OrdCode(3, 0)})
    with pytest.raises(ParseError):
        parse("fin(-1)")


def test_case_and_whitespace():
    assert parse("  SUM ( Rev(OMEGA) ,\n Rationals )") == Sum(Rev(Omega()), Rationals())
    assert parse("LexQ(W.2+1)") == LexQ(OrdCode(2, 1))
    assert parse("kurepa(w.3;)") == KurepaX(OrdCode(3, 0))


def test_dup_elements():
    e = parse("dup(sum(fin(2), rationals); l(1), r(-1/2))")
    assert e == Dup(Sum(Fin(2), Rationals()), {Left(1), Right(Fraction(-1, 2))})
    e = parse("dup(dup(fin(3); 1); p(1), 2)")
    assert e.points == {Half(1, 1), 2}
    e = parse("dup(kurepa(w.3; w.1); y(w.1), v[0:1, w.1+2:-3/4])")
    assert YPoint(OMEGA) in e.points and vec({0: 1, OrdCode(1, 2): Fraction(-3, 4)}) in e.points


@pytest.mark.parametrize(
    "bad, line, col",
    [
        ("fin(3", 1, 6),
        ("sum(omega fin(2))", 1, 11),
        ("circle", 1, 1),
        ("fin(2) extra", 1, 8),
        ("dup(fin(2); 5)", 1, 13),
        ("kurepa(w.2; w.3)", 1, 13),
        ("kurepa(w.3;\n 4)", 2, 2),
        ("dup(omega; y(3))", 1, 14),
    ],
)
def test_parse_errors_carry_position(bad, line, col):
    with pytest.raises(ParseError) as info:
        parse(bad)
    assert (info.value.line, info.value.column) == (line, col)


def test_element_round_trip():
    for x in [3, Fraction(-5, 7), Left(Right(2)), Half(Left(0), 1), YPoint(OrdCode(4, 0)), vec({OrdCode(2, 1): Fraction(1, 3), 0: -2}), vec()]:
        assert parse_element(element_to_text(x)) == x


def test_print_parse_round_trip_generated():
    rng = random.Random(2024)
    for _ in range(1000):
        e = random_expr(rng)
        text = to_text(e)
        assert parse(text) == e, text
        assert to_text(parse(text)) == text


def test_predicate_dup_has_no_text():
    with pytest.raises(TypeError):
        to_text(Dup(Omega(), lambda n: n % 2 == 0))


def test_parsed_finite_expression_materializes():
    assert len(materialize(parse("sum(fin(2), rev(fin(2)))"))) == 4
