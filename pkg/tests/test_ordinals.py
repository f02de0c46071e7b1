import pytest

from compact_lines.errors import InvalidOrdinal
from compact_lines.ordinals import OMEGA, OrdCode, parse_ord


def test_order_is_lexicographic():
    assert OrdCode(0, 100) < OMEGA < OrdCode(1, 1) < OrdCode(2, 0)


@pytest.mark.parametrize("code, limit", [(OrdCode(0, 0), False), (OrdCode(0, 5), False), (OMEGA, True), (OrdCode(3, 0), True), (OrdCode(3, 1), False)])
def test_is_limit(code, limit):
    assert code.is_limit is limit


def test_fundamental_sequence():
    w2 = OrdCode(2, 0)
    terms = [w2.fs(n) for n in range(5)]
    assert terms == [OrdCode(1, n + 1) for n in range(5)]
    assert all(t < w2 for t in terms)
    assert all(a < b for a, b in zip(terms, terms[1:]))
    assert w2.fs_index(OrdCode(1, 3)) == 2
    assert w2.fs_index(OrdCode(1, 0)) is None
    assert w2.fs_index(OrdCode(0, 3)) is None


def test_fundamental_ranges_are_disjoint():
    ranges = [{OrdCode(a, 0).fs(n) for n in range(20)} for a in range(1, 8)]
    for i, r in enumerate(ranges):
        for s in ranges[i + 1 :]:
            assert not r & s


def test_first_fs_at_least():
    w2 = OrdCode(2, 0)
    for alpha in [OrdCode(0, 7), OrdCode(1, 0), OrdCode(1, 1), OrdCode(1, 9)]:
        n = w2.first_fs_at_least(alpha)
        assert w2.fs(n) >= alpha
        assert n == 0 or w2.fs(n - 1) < alpha


def test_fs_needs_limit():
    with pytest.raises(InvalidOrdinal):
        OrdCode(1, 2).fs(0)


@pytest.mark.parametrize("text, code", [("5", OrdCode(0, 5)), ("w.2", OrdCode(2, 0)), ("w.2+3", OrdCode(2, 3)), ("W.1 + 4", OrdCode(1, 4))])
def test_parse_and_print(text, code):
    assert parse_ord(text) == code
    assert parse_ord(str(code)) == code


@pytest.mark.parametrize("bad", ["", "w", "w.", "-1", "w.2+", "x.3"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidOrdinal):
        parse_ord(bad)


def test_negative_code_rejected():
    with pytest.raises(InvalidOrdinal):
        OrdCode(-1, 0)
