"""Effectively presented linear orders.

An order is built from a small constructor algebra (:class:`Fin`,
:class:`Omega`, :class:`Rationals`, :class:`Rev`, :class:`Sum`,
:class:`LexQ`, :class:`KurepaX`, :class:`Dup`).  Every value is immutable and
every query below is a pure function of its arguments.

Element shapes per constructor:

=============  =====================================================
``Fin(n)``     ``int`` in ``range(n)``
``Omega``      ``int >= 0``
``Rationals``  ``int`` or :class:`fractions.Fraction`
``Rev(e)``     elements of ``e`` (reversal does not re-wrap)
``Sum(l, u)``  :class:`Left` / :class:`Right` around elements of l / u
``LexQ``       :class:`~compact_lines.points.Vec`
``KurepaX``    :class:`~compact_lines.points.Vec` or ``YPoint``
``Dup(e, P)``  elements of ``e`` outside ``P``, :class:`Half` for ``P``
=============  =====================================================
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

from .errors import Exhausted, ForeignElement, NotADuplication, NotFinite, PreconditionViolated
from .ordinals import OrdCode
from .points import Vec, YPoint, coord_at, lex_between, lex_compare, vec

__all__ = [
    "Ordering",
    "Side",
    "CharClass",
    "OrderExpr",
    "Fin",
    "Omega",
    "Rationals",
    "Rev",
    "Sum",
    "LexQ",
    "KurepaX",
    "Dup",
    "Left",
    "Right",
    "Half",
    "FiniteOrder",
    "contains",
    "compare",
    "successor",
    "predecessor",
    "between",
    "character",
    "duplicate",
    "collate",
    "collapse",
    "materialize",
    "is_finite",
    "iter_elements",
    "enumerate_elements",
]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class CharClass(enum.Enum):
    ISOLATED = "isolated"
    COUNTABLE_LIMIT = "countable_limit"
    UNCOUNTABLE_SURROGATE = "uncountable_surrogate"


@dataclass(frozen=True)
class Left:
    value: Any


@dataclass(frozen=True)
class Right:
    value: Any


@dataclass(frozen=True)
class Half:
    """One copy of a duplicated point; ``sign`` is -1 (lower) or +1 (upper)."""

    value: Any
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("Half.sign must be -1 or +1")


def _is_nat(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class OrderExpr:
    """Base class of the constructor algebra.

    Subclasses implement the private hooks; the module-level functions add
    membership checks and are the public API.
    """

    def _contains(self, a) -> bool:
        raise NotImplementedError

    def _cmp(self, a, b) -> int:
        raise NotImplementedError

    def _succ(self, a):
        raise NotImplementedError

    def _pred(self, a):
        raise NotImplementedError

    def _between(self, a, b):
        raise NotImplementedError

    def _above(self, a):
        """Some element strictly above ``a`` or None."""
        raise NotImplementedError

    def _below(self, a):
        raise NotImplementedError

    def _min(self):
        """Least element or None."""
        raise NotImplementedError

    def _max(self):
        raise NotImplementedError

    def _iter(self) -> Iterator:
        raise NotImplementedError

    def _finite(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Fin(OrderExpr):
    n: int

    def __post_init__(self):
        if not _is_nat(self.n):
            raise ValueError(f"Fin needs a natural number, got {self.n!r}")

    def _contains(self, a):
        return _is_nat(a) and a < self.n

    def _cmp(self, a, b):
        return _sign(a - b)

    def _succ(self, a):
        return a + 1 if a + 1 < self.n else None

    def _pred(self, a):
        return a - 1 if a > 0 else None

    def _between(self, a, b):
        return a + 1 if a + 1 < b else None

    _above = _succ
    _below = _pred

    def _min(self):
        return 0 if self.n else None

    def _max(self):
        return self.n - 1 if self.n else None

    def _iter(self):
        return iter(range(self.n))

    def _finite(self):
        return True


@dataclass(frozen=True)
class Omega(OrderExpr):
    def _contains(self, a):
        return _is_nat(a)

    def _cmp(self, a, b):
        return _sign(a - b)

    def _succ(self, a):
        return a + 1

    def _pred(self, a):
        return a - 1 if a > 0 else None

    def _between(self, a, b):
        return a + 1 if a + 1 < b else None

    _above = _succ
    _below = _pred

    def _min(self):
        return 0

    def _max(self):
        return None

    def _iter(self):
        return itertools.count()

    def _finite(self):
        return False


def _rationals_by_height() -> Iterator[Fraction]:
    """0, then every reduced p/q ordered by |p| + q, positive before negative."""
    yield Fraction(0)
    for h in itertools.count(2):
        for q in range(1, h):
            p = h - q
            if gcd(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)


@dataclass(frozen=True)
class Rationals(OrderExpr):
    def _contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool)

    def _cmp(self, a, b):
        return _sign(a - b)

    def _succ(self, a):
        return None

    _pred = _succ

    def _between(self, a, b):
        return Fraction(a + b) / 2

    def _above(self, a):
        return Fraction(a) + 1

    def _below(self, a):
        return Fraction(a) - 1

    def _min(self):
        return None

    _max = _min

    def _iter(self):
        return _rationals_by_height()

    def _finite(self):
        return False


@dataclass(frozen=True)
class Rev(OrderExpr):
    inner: OrderExpr

    def _contains(self, a):
        return self.inner._contains(a)

    def _cmp(self, a, b):
        return self.inner._cmp(b, a)

    def _succ(self, a):
        return self.inner._pred(a)

    def _pred(self, a):
        return self.inner._succ(a)

    def _between(self, a, b):
        return self.inner._between(b, a)

    def _above(self, a):
        return self.inner._below(a)

    def _below(self, a):
        return self.inner._above(a)

    def _min(self):
        return self.inner._max()

    def _max(self):
        return self.inner._min()

    def _iter(self):
        return self.inner._iter()

    def _finite(self):
        return self.inner._finite()


def _wrap(cls, x):
    return None if x is None else cls(x)


def _first(it: Iterator):
    return next(iter(it), None)


def _interleave(*iterators: Iterator) -> Iterator:
    live = list(iterators)
    while live:
        still = []
        for it in live:
            try:
                yield next(it)
            except StopIteration:
                continue
            still.append(it)
        live = still


@dataclass(frozen=True)
class Sum(OrderExpr):
    """Ordered sum: every element of ``lower`` precedes every element of ``upper``."""

    lower: OrderExpr
    upper: OrderExpr

    def _contains(self, a):
        if isinstance(a, Left):
            return self.lower._contains(a.value)
        if isinstance(a, Right):
            return self.upper._contains(a.value)
        return False

    def _cmp(self, a, b):
        if isinstance(a, Left) and isinstance(b, Left):
            return self.lower._cmp(a.value, b.value)
        if isinstance(a, Right) and isinstance(b, Right):
            return self.upper._cmp(a.value, b.value)
        return -1 if isinstance(a, Left) else 1

    def _is_last_lower(self, x) -> bool:
        top = self.lower._max()
        return top is not None and self.lower._cmp(x, top) == 0

    def _is_first_upper(self, x) -> bool:
        bot = self.upper._min()
        return bot is not None and self.upper._cmp(x, bot) == 0

    def _succ(self, a):
        if isinstance(a, Right):
            return _wrap(Right, self.upper._succ(a.value))
        s = self.lower._succ(a.value)
        if s is not None:
            return Left(s)
        if self._is_last_lower(a.value):
            return _wrap(Right, self.upper._min())
        return None

    def _pred(self, a):
        if isinstance(a, Left):
            return _wrap(Left, self.lower._pred(a.value))
        s = self.upper._pred(a.value)
        if s is not None:
            return Right(s)
        if self._is_first_upper(a.value):
            return _wrap(Left, self.lower._max())
        return None

    def _between(self, a, b):
        if isinstance(a, Left) and isinstance(b, Left):
            return _wrap(Left, self.lower._between(a.value, b.value))
        if isinstance(a, Right) and isinstance(b, Right):
            return _wrap(Right, self.upper._between(a.value, b.value))
        w = self.lower._above(a.value)
        if w is not None:
            return Left(w)
        return _wrap(Right, self.upper._below(b.value))

    def _above(self, a):
        if isinstance(a, Right):
            return _wrap(Right, self.upper._above(a.value))
        w = self.lower._above(a.value)
        if w is not None:
            return Left(w)
        return _wrap(Right, _first(self.upper._iter()))

    def _below(self, a):
        if isinstance(a, Left):
            return _wrap(Left, self.lower._below(a.value))
        w = self.upper._below(a.value)
        if w is not None:
            return Right(w)
        return _wrap(Left, _first(self.lower._iter()))

    def _min(self):
        lo = self.lower._min()
        if lo is not None:
            return Left(lo)
        if _first(self.lower._iter()) is not None:
            return None
        return _wrap(Right, self.upper._min())

    def _max(self):
        hi = self.upper._max()
        if hi is not None:
            return Right(hi)
        if _first(self.upper._iter()) is not None:
            return None
        return _wrap(Left, self.lower._max())

    def _iter(self):
        return _interleave(map(Left, self.lower._iter()), map(Right, self.upper._iter()))

    def _finite(self):
        return self.lower._finite() and self.upper._finite()


def _lex_sample() -> Iterator[Vec]:
    for q in _rationals_by_height():
        yield vec({0: q})


@dataclass(frozen=True)
class LexQ(OrderExpr):
    """Finite-support rational vectors indexed below ``kappa``, lexicographic."""

    kappa: OrdCode

    def _contains(self, a):
        if not isinstance(a, Vec):
            return False
        top = a.max_support()
        return top is None or top < self.kappa

    def _cmp(self, a, b):
        return lex_compare(a, b)

    def _succ(self, a):
        # dense once any coordinate exists; LexQ(0) is the single zero vector
        return None

    _pred = _succ

    def _between(self, a, b):
        return lex_between(a, b)

    def _above(self, a):
        if self.kappa == OrdCode(0, 0):
            return None
        return vec({0: coord_at(a, OrdCode(0, 0)) + 1})

    def _below(self, a):
        if self.kappa == OrdCode(0, 0):
            return None
        return vec({0: coord_at(a, OrdCode(0, 0)) - 1})

    def _min(self):
        return Vec() if self.kappa == OrdCode(0, 0) else None

    _max = _min

    def _iter(self):
        if self.kappa == OrdCode(0, 0):
            return iter([Vec()])
        return _lex_sample()

    def _finite(self):
        return self.kappa == OrdCode(0, 0)


@dataclass(frozen=True)
class KurepaX(LexQ):
    """``LexQ(kappa)`` extended by the gap fillers ``YPoint(d)`` for ``d`` in ``S``."""

    S: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        for d in self.S:
            if not (isinstance(d, OrdCode) and d.is_limit and d < self.kappa):
                raise ValueError(f"KurepaX needs limit codes below {self.kappa}, got {d}")

    def _contains(self, a):
        if isinstance(a, YPoint):
            return a.delta in self.S
        return super()._contains(a)

    def _iter(self):
        return itertools.chain((YPoint(d) for d in sorted(self.S)), super()._iter())

    def _finite(self):
        # S below kappa = 0 is empty
        return super()._finite()


@dataclass(frozen=True)
class Dup(OrderExpr):
    """``inner`` with each point of ``points`` replaced by ``Half(p, -1) < Half(p, +1)``.

    ``points`` is either a frozenset of inner elements or a predicate.
    Predicates cannot be printed by the DSL and compare by identity.
    """

    inner: OrderExpr
    points: frozenset | Callable[[Any], bool] = frozenset()

    def __post_init__(self):
        if not callable(self.points):
            pts = frozenset(self.points)
            object.__setattr__(self, "points", pts)
            for p in pts:
                if not self.inner._contains(p):
                    raise ForeignElement(f"duplicated point {p!r} is not an element of {self.inner}")

    def _dup(self, x) -> bool:
        if callable(self.points):
            return bool(self.points(x))
        return x in self.points

    def _lift(self, x, sign=-1):
        if x is None:
            return None
        return Half(x, sign) if self._dup(x) else x

    def _is_own_half(self, a) -> bool:
        # a Half may also be a plain element of a nested inner Dup
        return isinstance(a, Half) and self.inner._contains(a.value) and self._dup(a.value)

    def _key(self, a):
        return (a.value, a.sign) if self._is_own_half(a) else (a, 0)

    def _contains(self, a):
        if self._is_own_half(a):
            return True
        return self.inner._contains(a) and not self._dup(a)

    def _cmp(self, a, b):
        (x, s), (y, t) = self._key(a), self._key(b)
        c = self.inner._cmp(x, y)
        return c if c else _sign(s - t)

    def _succ(self, a):
        x, s = self._key(a)
        if s == -1:
            return Half(x, 1)
        return self._lift(self.inner._succ(x), -1)

    def _pred(self, a):
        x, s = self._key(a)
        if s == 1:
            return Half(x, -1)
        return self._lift(self.inner._pred(x), 1)

    def _between(self, a, b):
        x, s = self._key(a)
        y, t = self._key(b)
        if self.inner._cmp(x, y) == 0:
            return None
        if s == -1:
            return Half(x, 1)
        if t == 1:
            return Half(y, -1)
        return self._lift(self.inner._between(x, y))

    def _above(self, a):
        x, s = self._key(a)
        if s == -1:
            return Half(x, 1)
        return self._lift(self.inner._above(x))

    def _below(self, a):
        x, s = self._key(a)
        if s == 1:
            return Half(x, -1)
        return self._lift(self.inner._below(x))

    def _min(self):
        return self._lift(self.inner._min(), -1)

    def _max(self):
        return self._lift(self.inner._max(), 1)

    def _iter(self):
        for x in self.inner._iter():
            if self._dup(x):
                yield Half(x, -1)
                yield Half(x, 1)
            else:
                yield x

    def _finite(self):
        return self.inner._finite()


# -- public API ---------------------------------------------------------------


def contains(e: OrderExpr, a) -> bool:
    return e._contains(a)


def _check(e: OrderExpr, *elements):
    for a in elements:
        if not e._contains(a):
            raise ForeignElement(f"{a!r} is not an element of {e}")


def compare(e: OrderExpr, a, b) -> Ordering:
    _check(e, a, b)
    return Ordering(e._cmp(a, b))


def successor(e: OrderExpr, a):
    """Immediate successor of ``a`` or None."""
    _check(e, a)
    return e._succ(a)


def predecessor(e: OrderExpr, a):
    _check(e, a)
    return e._pred(a)


def between(e: OrderExpr, a, b):
    """Some element strictly between ``a < b``, or None if the interval is empty."""
    _check(e, a, b)
    if e._cmp(a, b) >= 0:
        raise PreconditionViolated(f"between needs {a!r} < {b!r}")
    return e._between(a, b)


def character(
    e: OrderExpr,
    a,
    side: Side,
    overrides: Mapping[Hashable, Iterable[Side] | Side] | None = None,
) -> CharClass:
    """Classify the one-sided character of ``a``.

    ``overrides`` maps elements to the side (or sides) that should read as
    :attr:`CharClass.UNCOUNTABLE_SURROGATE`; it is consulted last and every
    key must inhabit ``e``.
    """
    _check(e, a)
    if overrides:
        _check(e, *overrides)
        sides = overrides.get(a, ())
        if isinstance(sides, Side):
            sides = (sides,)
        if side in sides:
            return CharClass.UNCOUNTABLE_SURROGATE
    if side is Side.LEFT:
        neighbour, extreme = e._pred(a), e._min()
    else:
        neighbour, extreme = e._succ(a), e._max()
    if neighbour is not None or (extreme is not None and e._cmp(a, extreme) == 0):
        return CharClass.ISOLATED
    return CharClass.COUNTABLE_LIMIT


def duplicate(e: OrderExpr, points: Iterable | Callable[[Any], bool]) -> Dup:
    if callable(points):
        return Dup(e, points)
    return Dup(e, frozenset(points))


def collate(e: OrderExpr) -> OrderExpr:
    """Quotient of a :class:`Dup` order identifying each duplicated pair."""
    if not isinstance(e, Dup):
        raise NotADuplication(f"{e} is not a duplication")
    return e.inner


def collapse(e: OrderExpr, a):
    """Image of an element of a :class:`Dup` order under the collating quotient."""
    if not isinstance(e, Dup):
        raise NotADuplication(f"{e} is not a duplication")
    _check(e, a)
    return a.value if e._is_own_half(a) else a


def is_finite(e: OrderExpr) -> bool:
    return e._finite()


def iter_elements(e: OrderExpr) -> Iterator:
    """Deterministic enumeration of the elements of ``e``.

    Fin and Omega count up; Rationals go by height ``|p| + q``; Sum
    alternates between its summands; Dup emits both halves of a duplicated
    point in place; LexQ walks ``{0: q}`` over the rationals; KurepaX emits
    its gap fillers in increasing level first.
    """
    return e._iter()


def enumerate_elements(e: OrderExpr, n: int) -> list:
    out = list(itertools.islice(e._iter(), n))
    if len(out) < n:
        raise Exhausted(f"{e} has only {len(out)} elements, {n} requested")
    return out


@dataclass(frozen=True)
class FiniteOrder:
    """A materialised chain: ``labels`` listed in strictly increasing order."""

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("FiniteOrder labels must be pairwise distinct")

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, x):
        return x in self._index

    def __getitem__(self, i):
        return self.labels[i]

    @property
    def _index(self) -> dict:
        # cached on first use; safe since the instance is immutable
        try:
            return self.__dict__["_idx"]
        except KeyError:
            idx = {x: i for i, x in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
            return idx

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ForeignElement(f"{x!r} is not a label of this chain") from None

    def compare(self, a, b) -> Ordering:
        return Ordering(_sign(self.index(a) - self.index(b)))

    def restrict(self, subset: Iterable) -> FiniteOrder:
        keep = set(subset)
        return FiniteOrder(tuple(x for x in self.labels if x in keep))

    @classmethod
    def chain(cls, n: int) -> FiniteOrder:
        return cls(tuple(range(n)))


def materialize(e: OrderExpr) -> FiniteOrder:
    """The explicit chain of a finite order; raises :class:`NotFinite` otherwise."""
    if not e._finite():
        raise NotFinite(f"{e} is not finite")
    elements = list(e._iter())
    ordered = sorted(elements, key=_cmp_key(e))
    return FiniteOrder(tuple(ordered))


def _cmp_key(e: OrderExpr):
    from functools import cmp_to_key

    return cmp_to_key(e._cmp)
