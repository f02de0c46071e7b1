"""Kurepa-style lexicographic lines with planted gap fillers.

The ambient order is ``KurepaX(kappa, S)``: finite-support rational vectors
indexed below ``kappa`` plus one point ``y_d = YPoint(d)`` per limit ``d`` in
``S``.  The level-``d`` suborder ``X_d`` collects the points whose support is
bounded strictly below ``d``.  For ``d`` in ``S`` the point ``y_d`` sits in a
proper gap of ``X_d``; the witness functions below certify that constructively
one step at a time.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, Mapping

from .duality import Filtration, SubOrderPresentation
from .errors import (
    InfiniteSupportSuspected,
    InfiniteTruncation,
    InvalidOrdinal,
    NotIncreasing,
    PreconditionViolated,
    StabilizationViolation,
)
from .ordinals import OrdCode
from .orders import KurepaX, _rationals_by_height
from .points import (
    KurepaPoint,
    Vec,
    YPoint,
    coord_at,
    first_difference,
    lex_between,
    lex_compare,
    vec,
)

__all__ = [
    "SignedPoint",
    "NEG_INF",
    "POS_INF",
    "in_filtration",
    "truncate_projection",
    "gap_witness_left",
    "gap_witness_right",
    "sup_stable_stream",
    "stab_from_table",
    "build_filtration_presentation",
    "kurepa_filtration",
]


@total_ordering
@dataclass(frozen=True)
class SignedPoint:
    """A point of the ambient order extended by two ends.

    ``kind`` is -1 for minus infinity, +1 for plus infinity and 0 for an
    actual ``point``.
    """

    kind: int
    point: KurepaPoint | None = None

    @classmethod
    def of(cls, p: KurepaPoint) -> SignedPoint:
        return cls(0, p)

    def _cmp(self, other: SignedPoint) -> int:
        if self.kind or other.kind:
            return (self.kind > other.kind) - (self.kind < other.kind)
        return lex_compare(self.point, other.point)

    def __lt__(self, other):
        if not isinstance(other, SignedPoint):
            return NotImplemented
        return self._cmp(other) < 0

    def __str__(self):
        return {-1: "-inf", 1: "+inf"}.get(self.kind) or str(self.point)


NEG_INF = SignedPoint(-1)
POS_INF = SignedPoint(1)


def _require_limit(delta: OrdCode):
    if not delta.is_limit:
        raise InvalidOrdinal(f"{delta} is not a limit code")


def in_filtration(p: KurepaPoint, delta: OrdCode) -> bool:
    """Whether some ``gamma < delta`` bounds the support of ``p`` strictly."""
    if isinstance(p, YPoint):
        return p.delta < delta
    top = p.max_support()
    if top is None:
        return delta > OrdCode(0, 0)
    return top.succ() < delta


def truncate_projection(p: KurepaPoint, delta: OrdCode) -> SignedPoint:
    """Restrict ``p`` to the coordinates below ``delta``.

    The result is a member of ``X_delta`` and the map is increasing and fixes
    ``X_delta``.  ``YPoint(delta)`` itself has no such restriction and raises
    :class:`InfiniteTruncation`.  Restriction never leaves the convex hull of
    ``X_delta``, so the infinite ends are not produced for ``delta > 0``.
    """
    if delta == OrdCode(0, 0):
        raise InvalidOrdinal("X_0 is empty; truncation needs delta > 0")
    if isinstance(p, Vec):
        return SignedPoint.of(p.restrict(delta))
    lam = p.delta
    if lam < delta:
        return SignedPoint.of(p)
    if lam == delta:
        raise InfiniteTruncation(f"restriction of y({lam}) below {lam} has infinite support")
    return SignedPoint.of(vec({a: 1 for a in _fs_below(lam, delta)}))


def _fs_below(lam: OrdCode, bound: OrdCode) -> list[OrdCode]:
    """Fundamental-sequence terms of ``lam`` strictly below ``bound <= lam``."""
    out = []
    for n in itertools.count():
        alpha = lam.fs(n)
        if alpha >= bound:
            return out
        out.append(alpha)


def _ones_through(delta: OrdCode, n: int) -> dict:
    return {delta.fs(i): Fraction(1) for i in range(n + 1)}


def _check_side(delta: OrdCode, p: KurepaPoint, want: int, name: str):
    _require_limit(delta)
    if not in_filtration(p, delta):
        raise PreconditionViolated(f"{name}: {p} is not in X_{delta}")
    if lex_compare(p, YPoint(delta)) != want:
        rel = "below" if want < 0 else "above"
        raise PreconditionViolated(f"{name}: {p} is not {rel} y({delta})")


def gap_witness_left(delta: OrdCode, a: KurepaPoint) -> Vec:
    """A member of ``X_delta`` strictly between ``a`` and ``y_delta``.

    With ``alpha`` the first coordinate where ``a`` and ``y_delta`` differ,
    copy ``y_delta`` up to the first fundamental-sequence term ``>= alpha``.
    """
    _check_side(delta, a, -1, "gap_witness_left")
    alpha = first_difference(a, YPoint(delta))
    n = delta.first_fs_at_least(alpha)
    return vec(_ones_through(delta, n))


def gap_witness_right(delta: OrdCode, b: KurepaPoint) -> Vec:
    """A member of ``X_delta`` strictly between ``y_delta`` and ``b``.

    Copies ``y_delta`` up to the first fundamental-sequence term ``>= alpha``
    and puts 2 on the next term, where ``y_delta`` has 1.
    """
    _check_side(delta, b, 1, "gap_witness_right")
    alpha = first_difference(YPoint(delta), b)
    n = delta.first_fs_at_least(alpha)
    coords = _ones_through(delta, n)
    coords[delta.fs(n + 1)] = Fraction(2)
    return vec(coords)


# -- suprema of stabilising streams -------------------------------------------


def stab_from_table(table: Mapping[OrdCode, int]) -> Callable[[OrdCode], int]:
    """Turn a finite ``{gamma: index}`` certificate table into a ``stab`` function.

    ``stab(gamma)`` uses the entry with the least key ``>= gamma``: an index
    after which all coordinates below that key are constant also works for
    every smaller ``gamma``.
    """
    items = sorted(table.items())

    def stab(gamma: OrdCode) -> int:
        for key, idx in items:
            if key >= gamma:
                return idx
        raise StabilizationViolation(f"no stabilisation certificate covers coordinate {gamma}")

    return stab


def _direction(terms: list) -> int:
    """+1 if weakly increasing, -1 if weakly decreasing, 0 if constant."""
    direction = 0
    for i, (p, q) in enumerate(zip(terms, terms[1:])):
        c = lex_compare(p, q)
        if c == 0:
            continue
        step = -c
        if direction and step != direction:
            raise NotIncreasing(f"stream changes direction at index {i + 1}")
        direction = step
    return direction


def sup_stable_stream(
    stream: Callable[[int], KurepaPoint],
    stab: Callable[[OrdCode], int],
    probe_n: int,
    *,
    support_bound: int = 64,
    upper_probes: Iterable[KurepaPoint] = (),
) -> Vec:
    """Limit of a monotone stream whose coordinates stabilise.

    ``stab(gamma)`` claims an index after which every coordinate below
    ``gamma`` is constant.  The limit ``g`` takes, at each coordinate
    ``alpha``, the value at index ``stab(alpha + 1)``; each claim is checked
    on the ``probe_n`` terms following it.  For an increasing stream ``g`` is
    verified to bound the first ``probe_n`` terms from above and to lie below
    every member of ``upper_probes`` (which must themselves be upper bounds);
    a decreasing stream is handled symmetrically.
    """
    if probe_n < 1:
        raise ValueError("probe_n must be >= 1")
    cache: dict[int, KurepaPoint] = {}

    def term(i: int) -> KurepaPoint:
        if i not in cache:
            cache[i] = stream(i)
        return cache[i]

    prefix = [term(i) for i in range(probe_n)]
    _direction(prefix)

    coords: set[OrdCode] = set()
    for p in prefix:
        if isinstance(p, YPoint):
            raise InfiniteSupportSuspected(f"stream term {p} has infinite support")
        coords.update(p.support)
        if len(coords) > support_bound:
            raise InfiniteSupportSuspected(f"probed support exceeds {support_bound} coordinates")

    limit = {}
    pending = sorted(coords)
    seen = set(pending)
    while pending:
        alpha = pending.pop(0)
        start = stab(alpha.succ())
        if start < 0:
            raise StabilizationViolation(f"negative certificate index for {alpha}")
        window = [term(i) for i in range(start, start + probe_n)]
        value = coord_at(window[0], alpha)
        for offset, p in enumerate(window):
            if isinstance(p, YPoint):
                raise InfiniteSupportSuspected(f"stream term {p} has infinite support")
            if coord_at(p, alpha) != value:
                raise StabilizationViolation(
                    f"coordinate {alpha} changes at index {start + offset} after claimed index {start}"
                )
            fresh = [beta for beta in p.support if beta not in seen]
            seen.update(fresh)
            pending.extend(fresh)
        pending.sort()
        if len(seen) > support_bound:
            raise InfiniteSupportSuspected(f"stabilised support exceeds {support_bound} coordinates")
        limit[alpha] = value

    # monotonicity over every index that was evaluated, as one contiguous run
    direction = _direction([term(i) for i in range(max(cache) + 1)])
    g = vec(limit)
    sign = direction or 1
    for i, p in enumerate(prefix):
        if lex_compare(p, g) == sign:
            raise StabilizationViolation(f"limit {g} does not bound term {i} ({p})")
    for u in upper_probes:
        if any(lex_compare(p, u) == sign for p in prefix):
            raise ValueError(f"probe {u} is not a bound of the probed terms")
        if lex_compare(g, u) == sign:
            raise StabilizationViolation(f"limit {g} is not the least bound: {u} is tighter")
    return g


# -- the level-delta suborder as a presentation -------------------------------


def _level_sample(delta: OrdCode, S: Iterable[OrdCode]):
    fillers = [YPoint(d) for d in sorted(S) if d < delta]

    def sample():
        return itertools.chain(fillers, (vec({0: q}) for q in _rationals_by_height()))

    return sample


def build_filtration_presentation(kappa: OrdCode, S: Iterable[OrdCode], delta: OrdCode) -> SubOrderPresentation:
    """Present ``X_delta`` inside ``KurepaX(kappa, S)``.

    For ``x = y_delta`` the witnesses are :func:`gap_witness_left` and
    :func:`gap_witness_right`.  For any other ``x`` outside ``X_delta`` the
    cut is determined by the restriction ``t`` of ``x`` to the level: ``t``
    is the extreme member on its side of ``x`` (the chain stops there), and
    the other side is dense, answered by lexicographic midpoints.
    """
    _require_limit(delta)
    return _level_presentation(kappa, frozenset(S), delta)


def _level_bound(delta: OrdCode) -> OrdCode:
    """``X_delta`` is exactly the set of points supported strictly below this code."""
    if delta.is_successor:
        return OrdCode(delta.a, delta.b - 1)
    return delta


def _level_restriction(x: KurepaPoint, bound: OrdCode) -> Vec:
    if isinstance(x, Vec):
        return x.restrict(bound)
    return vec({a: 1 for a in _fs_below(x.delta, bound)})


def _level_presentation(kappa: OrdCode, S: frozenset, delta: OrdCode) -> SubOrderPresentation:
    if delta > kappa:
        raise InvalidOrdinal(f"delta {delta} exceeds kappa {kappa}")
    ambient = KurepaX(kappa, S)
    filler = YPoint(delta) if delta.is_limit else None
    bound = _level_bound(delta)

    def left(x, a):
        if x == filler:
            return gap_witness_left(delta, a)
        t = _level_restriction(x, bound)
        if lex_compare(t, x) < 0:
            # t is the largest member below x
            return t if lex_compare(a, t) < 0 else None
        return lex_between(a, t)

    def right(x, b):
        if x == filler:
            return gap_witness_right(delta, b)
        t = _level_restriction(x, bound)
        if lex_compare(t, x) > 0:
            return t if lex_compare(t, b) < 0 else None
        return lex_between(t, b)

    sample = _level_sample(delta, S) if delta > OrdCode(0, 0) else (lambda: iter(()))
    return SubOrderPresentation(
        ambient,
        lambda p: in_filtration(p, delta),
        sample,
        left,
        right,
        sample_limit=64,
        label=f"X_{delta} in kurepa({kappa}; {', '.join(map(str, sorted(S)))})",
    )


def kurepa_filtration(kappa: OrdCode, S: Iterable[OrdCode]) -> Filtration:
    """The family ``(X_d)`` for ``d <= kappa``; ``indices`` lists the limit stages."""
    S = frozenset(S)
    limits = tuple(OrdCode(a, 0) for a in range(1, kappa.a + 1))
    return Filtration(
        KurepaX(kappa, S),
        lambda d: _level_presentation(kappa, S, d),
        limits,
    )
