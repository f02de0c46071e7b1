"""Points of the lexicographic space of finite-support rational vectors.

Two kinds of point live here:

* :class:`Vec` -- a finite-support map from ordinal codes to nonzero
  rationals;
* :class:`YPoint` -- the characteristic function of the range of the
  fundamental sequence of a limit code.  Its coordinates are computed on
  demand and it is never expanded into a map.

Comparison is lexicographic: two points are ordered by their values at the
least coordinate where they differ.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import ComparisonDiverged, InvalidOrdinal, ParseError
from .ordinals import OrdCode, parse_ord

__all__ = [
    "Vec",
    "YPoint",
    "KurepaPoint",
    "vec",
    "ZERO_VEC",
    "coord_at",
    "candidate_coords",
    "first_difference",
    "lex_compare",
    "lex_between",
    "format_point",
    "parse_point",
    "format_rational",
    "MAX_SCAN",
]

MAX_SCAN = 1_000_000
_ZERO = Fraction(0)


def _as_ord(key) -> OrdCode:
    if isinstance(key, OrdCode):
        return key
    if isinstance(key, int) and not isinstance(key, bool):
        return OrdCode(0, key)
    if isinstance(key, str):
        return parse_ord(key)
    raise TypeError(f"not an ordinal code: {key!r}")


@dataclass(frozen=True)
class Vec:
    """Finite-support rational vector; ``entries`` is sorted and zero-free.

    Build instances with :func:`vec` rather than the raw constructor.
    """

    entries: tuple[tuple[OrdCode, Fraction], ...] = ()

    @property
    def support(self) -> tuple[OrdCode, ...]:
        return tuple(k for k, _ in self.entries)

    def as_dict(self) -> dict[OrdCode, Fraction]:
        return dict(self.entries)

    @property
    def _lookup(self) -> dict[OrdCode, Fraction]:
        # built lazily; the instance is immutable so the cache never goes stale
        try:
            return self.__dict__["_map"]
        except KeyError:
            table = dict(self.entries)
            object.__setattr__(self, "_map", table)
            return table

    def get(self, alpha: OrdCode) -> Fraction:
        return self._lookup.get(alpha, _ZERO)

    def max_support(self) -> OrdCode | None:
        return self.entries[-1][0] if self.entries else None

    def restrict(self, bound: OrdCode) -> Vec:
        """Coordinates strictly below ``bound``."""
        return Vec(tuple((k, v) for k, v in self.entries if k < bound))

    def __str__(self) -> str:
        return format_point(self)


@dataclass(frozen=True)
class YPoint:
    """Characteristic function of ``{fs(delta, n) : n >= 0}``."""

    delta: OrdCode

    def __post_init__(self):
        if not self.delta.is_limit:
            raise InvalidOrdinal(f"YPoint needs a limit code, got {self.delta}")

    def __str__(self) -> str:
        return format_point(self)


KurepaPoint = Union[Vec, YPoint]


def vec(mapping: Mapping | None = None) -> Vec:
    """Normalise a mapping ``{ord: rational}`` into a :class:`Vec`.

    Keys may be :class:`OrdCode`, plain ints (finite ordinals) or ``"w.a+b"``
    strings; zero values are dropped.
    """
    items = {}
    for key, value in (mapping or {}).items():
        value = Fraction(value)
        if value != 0:
            items[_as_ord(key)] = value
    return Vec(tuple(sorted(items.items())))


ZERO_VEC = Vec()


def coord_at(p: KurepaPoint, alpha: OrdCode) -> Fraction:
    if isinstance(p, Vec):
        return p.get(alpha)
    return Fraction(1) if p.delta.fs_index(alpha) is not None else Fraction(0)


def candidate_coords(p: KurepaPoint) -> Iterator[OrdCode]:
    """Increasing stream of coordinates where ``p`` may be nonzero."""
    if isinstance(p, Vec):
        return iter(p.support)
    return (p.delta.fs(n) for n in itertools.count())


def first_difference(p: KurepaPoint, q: KurepaPoint, limit: int = MAX_SCAN) -> OrdCode | None:
    """Least coordinate where ``p`` and ``q`` differ, or None if equal."""
    if p == q:
        return None
    merged = heapq.merge(candidate_coords(p), candidate_coords(q))
    last = None
    for steps, alpha in enumerate(merged):
        if steps >= limit:
            raise ComparisonDiverged(f"no difference between {p} and {q} after {limit} coordinates")
        if alpha == last:
            continue
        last = alpha
        if coord_at(p, alpha) != coord_at(q, alpha):
            return alpha
    # both streams finite and exhausted with no disagreement
    return None


def lex_compare(p: KurepaPoint, q: KurepaPoint) -> int:
    """Return -1, 0 or 1 as ``p`` is below, equal to or above ``q``."""
    alpha = first_difference(p, q)
    if alpha is None:
        return 0
    return -1 if coord_at(p, alpha) < coord_at(q, alpha) else 1


def _restrict_finite(p: KurepaPoint, bound: OrdCode) -> dict[OrdCode, Fraction]:
    if isinstance(p, Vec):
        return p.restrict(bound).as_dict()
    delta = p.delta
    if bound >= delta:
        raise ValueError("restriction of a YPoint at or above its level is infinite")
    if bound.a < delta.a - 1:
        return {}
    return {delta.fs(n): Fraction(1) for n in range(max(bound.b - 1, 0))}


def lex_between(p: KurepaPoint, q: KurepaPoint) -> Vec:
    """A finite vector strictly between ``p < q``.

    Agrees with ``p`` below their first difference and takes the midpoint
    there.  Never returns a :class:`YPoint`.
    """
    alpha = first_difference(p, q)
    if alpha is None or coord_at(p, alpha) > coord_at(q, alpha):
        raise ValueError(f"lex_between needs p < q, got {p}, {q}")
    lower = _restrict_finite(p, alpha)
    lower[alpha] = (coord_at(p, alpha) + coord_at(q, alpha)) / 2
    return vec(lower)


def format_rational(x) -> str:
    return str(Fraction(x))


def format_point(p: KurepaPoint) -> str:
    """Serialise as ``v[ord:p/q, ...]`` (sorted) or ``y(ord)``."""
    if isinstance(p, YPoint):
        return f"y({p.delta})"
    return "v[" + ", ".join(f"{k}:{format_rational(v)}" for k, v in p.entries) + "]"


def parse_point(text: str) -> KurepaPoint:
    """Inverse of :func:`format_point`."""
    from .dsl import parse_element

    p = parse_element(text)
    if not isinstance(p, (Vec, YPoint)):
        raise ParseError(f"expected a vector or y-point, got {text!r}")
    return p
