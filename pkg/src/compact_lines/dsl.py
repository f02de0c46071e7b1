"""Text syntax for order expressions, ordinal codes and elements.

Grammar (keywords case-insensitive, whitespace insignificant)::

    expr  := "fin(" nat ")" | "omega" | "rationals"
           | "rev(" expr ")" | "sum(" expr "," expr ")"
           | "lexq(" ord ")" | "kurepa(" ord ";" [ord ("," ord)*] ")"
           | "dup(" expr ";" [elem ("," elem)*] ")"
    ord   := nat | "w." nat | "w." nat "+" nat
    elem  := int | int "/" nat
           | "l(" elem ")" | "r(" elem ")"          -- sum summands
           | "m(" elem ")" | "p(" elem ")"          -- lower / upper half of a duplicated point
           | "y(" ord ")"                           -- gap filler
           | "v[" [ord ":" rational ("," ...)*] "]" -- finite-support vector

:func:`to_text` prints the canonical form; ``parse(to_text(e)) == e``.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvalidOrdinal, OrderError, ParseError
from .ordinals import OrdCode
from .orders import Dup, Fin, Half, KurepaX, Left, LexQ, Omega, OrderExpr, Rationals, Rev, Right, Sum, contains
from .points import Vec, YPoint, format_point, vec

__all__ = ["parse", "parse_element", "to_text", "element_to_text"]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level ----------------------------------------------------------

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message, pos=None):
        line, col = self.where(pos)
        return ParseError(message, line, col)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos : self.pos + 1]

    def expect(self, token: str):
        self.skip()
        if self.text[self.pos : self.pos + len(token)].lower() != token:
            found = self.text[self.pos : self.pos + len(token)] or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text[self.pos : self.pos + len(token)].lower() == token:
            self.pos += len(token)
            return True
        return False

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos].lower()

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def integer(self) -> int:
        neg = self.accept("-")
        n = self.nat()
        return -n if neg else n

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    # -- grammar --------------------------------------------------------------

    def ordinal(self) -> OrdCode:
        self.skip()
        if self.peek().lower() == "w":
            self.pos += 1
            self.expect(".")
            a = self.nat()
            b = self.nat() if self.accept("+") else 0
            return OrdCode(a, b)
        return OrdCode(0, self.nat())

    def rational(self):
        n = self.integer()
        if self.accept("/"):
            d_pos = self.pos
            d = self.nat()
            if d == 0:
                raise self.error("zero denominator", d_pos)
            return Fraction(n, d)
        return n

    def sep_list(self, item, close: str) -> list:
        items = []
        if self.peek() == close:
            return items
        items.append(item())
        while self.accept(","):
            items.append(item())
        return items

    def expr(self) -> OrderExpr:
        start = self.pos
        kw = self.word()
        if kw == "omega":
            return Omega()
        if kw == "rationals":
            return Rationals()
        if kw == "fin":
            self.expect("(")
            self.skip()
            if self.peek() == "-":
                raise self.error("fin needs a natural number")
            n = self.nat()
            self.expect(")")
            return Fin(n)
        if kw == "rev":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Rev(inner)
        if kw == "sum":
            self.expect("(")
            lower = self.expr()
            self.expect(",")
            upper = self.expr()
            self.expect(")")
            return Sum(lower, upper)
        if kw == "lexq":
            self.expect("(")
            kappa = self.ordinal()
            self.expect(")")
            return LexQ(kappa)
        if kw == "kurepa":
            self.expect("(")
            kappa = self.ordinal()
            self.expect(";")
            self.skip()
            s_pos = self.pos
            S = self.sep_list(self.ordinal, ")")
            self.expect(")")
            try:
                return KurepaX(kappa, frozenset(S))
            except (ValueError, InvalidOrdinal) as exc:
                raise self.error(str(exc), s_pos) from None
        if kw == "dup":
            self.expect("(")
            inner = self.expr()
            self.expect(";")
            elems = []
            if self.peek() != ")":
                while True:
                    self.skip()
                    e_pos = self.pos
                    x = self.element()
                    if not contains(inner, x):
                        raise self.error(f"{element_to_text(x)} is not an element of {to_text(inner)}", e_pos)
                    elems.append(x)
                    if not self.accept(","):
                        break
            self.expect(")")
            return Dup(inner, frozenset(elems))
        raise self.error(f"unknown order constructor {kw!r}" if kw else "expected an order expression", start)

    def element(self):
        c = self.peek().lower()
        if c == "-" or c.isdigit():
            return self.rational()
        start = self.pos
        kw = self.word()
        if kw in ("l", "r", "m", "p"):
            self.expect("(")
            inner = self.element()
            self.expect(")")
            return {"l": Left, "r": Right}[kw](inner) if kw in "lr" else Half(inner, -1 if kw == "m" else 1)
        if kw == "y":
            self.expect("(")
            self.skip()
            o_pos = self.pos
            delta = self.ordinal()
            self.expect(")")
            try:
                return YPoint(delta)
            except InvalidOrdinal as exc:
                raise self.error(str(exc), o_pos) from None
        if kw == "v":
            self.expect("[")
            pairs = self.sep_list(self._pair, "]")
            self.expect("]")
            keys = [k for k, _ in pairs]
            if len(set(keys)) != len(keys):
                raise self.error("repeated coordinate in vector")
            return vec(dict(pairs))
        raise self.error("expected an element", start)

    def _pair(self):
        k = self.ordinal()
        self.expect(":")
        return k, self.rational()


def parse(text: str) -> OrderExpr:
    p = _Parser(text)
    try:
        e = p.expr()
    except ParseError:
        raise
    except (OrderError, ValueError) as exc:
        raise p.error(str(exc)) from None
    p.end()
    return e


def parse_element(text: str):
    p = _Parser(text)
    x = p.element()
    p.end()
    return x


def parse_ordinal(text: str) -> OrdCode:
    p = _Parser(text)
    o = p.ordinal()
    p.end()
    return o


def element_to_text(x) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not elements")
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, Left):
        return f"l({element_to_text(x.value)})"
    if isinstance(x, Right):
        return f"r({element_to_text(x.value)})"
    if isinstance(x, Half):
        return f"{'m' if x.sign < 0 else 'p'}({element_to_text(x.value)})"
    if isinstance(x, (Vec, YPoint)):
        return format_point(x)
    raise TypeError(f"no text form for element {x!r}")


def _sorted_elements(e: OrderExpr, elems) -> list:
    # canonical order: by the order of the expression itself
    from functools import cmp_to_key

    return sorted(elems, key=cmp_to_key(e._cmp))


def to_text(e: OrderExpr) -> str:
    if isinstance(e, Fin):
        return f"fin({e.n})"
    if isinstance(e, Omega):
        return "omega"
    if isinstance(e, Rationals):
        return "rationals"
    if isinstance(e, Rev):
        return f"rev({to_text(e.inner)})"
    if isinstance(e, Sum):
        return f"sum({to_text(e.lower)}, {to_text(e.upper)})"
    if isinstance(e, KurepaX):
        return f"kurepa({e.kappa}; {', '.join(str(d) for d in sorted(e.S))})".replace("; )", ";)")
    if isinstance(e, LexQ):
        return f"lexq({e.kappa})"
    if isinstance(e, Dup):
        if callable(e.points):
            raise TypeError("a Dup with a predicate has no text form")
        body = ", ".join(element_to_text(x) for x in _sorted_elements(e.inner, e.points))
        return f"dup({to_text(e.inner)}; {body})".replace("; )", ";)")
    raise TypeError(f"no text form for {e!r}")
