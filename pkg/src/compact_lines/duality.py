"""Duality between linear orders and zero-dimensional compact lines.

For a finite chain ``X`` the dual line ``K(X)`` is the chain of its final
segments under reverse inclusion; going back, ``X(K)`` is the chain of final
segments of ``K`` omitting the bottom and containing the top.  An inclusion
``Y <= X`` dualises to the increasing surjection ``F -> F & Y`` from ``K(X)``
onto ``K(Y)``.

Infinite suborders are handled through :class:`SubOrderPresentation`, which
carries constructive witnesses for the two sides of a cut, so gap filling can
be semi-decided to a fixed depth.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping

from .errors import (
    EmptyOrder,
    ForeignElement,
    GapObstruction,
    InvalidWitness,
    NotASubset,
    NotRightInverse,
)
from .orders import CharClass, FiniteOrder, OrderExpr, Side, compare, contains

__all__ = [
    "FiniteCompactLine",
    "IncreasingMap",
    "SubOrderPresentation",
    "Filtration",
    "GapReason",
    "FillsToDepth",
    "NotGap",
    "k_finite",
    "x_finite",
    "x_embedding",
    "k_embedding",
    "dual_inclusion",
    "right_inverse_from_gaps",
    "projection_from_right_inverse",
    "finite_presentation",
    "fills_proper_gap",
]


@dataclass(frozen=True)
class FiniteCompactLine(FiniteOrder):
    """``K(source)``: labels are frozensets, from ``source`` itself down to the empty set."""

    source: FiniteOrder = field(default_factory=lambda: FiniteOrder(()))

    @property
    def bottom(self) -> frozenset:
        return self.labels[0]

    @property
    def top(self) -> frozenset:
        return self.labels[-1]


@dataclass(frozen=True)
class IncreasingMap:
    domain: FiniteOrder
    codomain: FiniteOrder
    table: tuple  # codomain label per domain position

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != len(self.domain):
            raise ValueError("map table must cover the whole domain")
        for y in self.table:
            self.codomain.index(y)

    @classmethod
    def from_function(cls, domain: FiniteOrder, codomain: FiniteOrder, fn: Callable) -> IncreasingMap:
        return cls(domain, codomain, tuple(fn(x) for x in domain))

    def __call__(self, x):
        return self.table[self.domain.index(x)]

    def is_increasing(self) -> bool:
        pos = [self.codomain.index(y) for y in self.table]
        return all(a <= b for a, b in zip(pos, pos[1:]))

    def is_surjective(self) -> bool:
        return set(self.table) == set(self.codomain.labels)

    def fiber(self, y) -> list:
        return [x for x, fx in zip(self.domain, self.table) if fx == y]

    def compose(self, inner: IncreasingMap) -> IncreasingMap:
        """``self o inner``."""
        return IncreasingMap(inner.domain, self.codomain, tuple(self(y) for y in inner.table))

    def is_identity(self) -> bool:
        return self.domain == self.codomain and self.table == self.domain.labels


def k_finite(X: FiniteOrder) -> FiniteCompactLine:
    segments = tuple(frozenset(X.labels[i:]) for i in range(len(X) + 1))
    return FiniteCompactLine(segments, source=X)


def x_finite(K: FiniteOrder) -> FiniteOrder:
    """Final segments of ``K`` that miss its bottom and contain its top."""
    if len(K) == 0:
        raise EmptyOrder("X(K) needs a nonempty compact line")
    return FiniteOrder(tuple(frozenset(K.labels[i:]) for i in range(1, len(K))))


def x_embedding(X: FiniteOrder) -> IncreasingMap:
    """Canonical isomorphism ``X -> X(K(X))``: ``x -> {F in K(X) : x not in F}``."""
    K = k_finite(X)
    XK = x_finite(K)
    return IncreasingMap.from_function(X, XK, lambda x: frozenset(F for F in K if x not in F))


def k_embedding(K: FiniteOrder) -> IncreasingMap:
    """Canonical isomorphism ``K -> K(X(K))``: ``k -> {F in X(K) : k not in F}``."""
    XK = x_finite(K)
    KXK = k_finite(XK)
    return IncreasingMap.from_function(K, KXK, lambda k: frozenset(F for F in XK if k not in F))


def dual_inclusion(X: FiniteOrder, Y: Iterable) -> IncreasingMap:
    """The increasing surjection ``K(X) -> K(Y)``, ``F -> F & Y``."""
    Y = set(Y)
    if not Y <= set(X.labels):
        raise NotASubset(f"{sorted(map(repr, Y - set(X.labels)))} not in X")
    KX, KY = k_finite(X), k_finite(X.restrict(Y))
    return IncreasingMap.from_function(KX, KY, lambda F: F & Y)


def _finite_character(line: FiniteOrder, point, side: Side) -> CharClass:
    # every point of a finite line is isolated on both sides
    return CharClass.ISOLATED


def right_inverse_from_gaps(
    f: IncreasingMap,
    character: Callable[[FiniteOrder, Any, Side], CharClass] | None = None,
) -> IncreasingMap:
    """Right inverse ``g`` of ``f`` chosen fiber by fiber.

    For a fiber ``[lo, hi]`` with ``lo < hi``: pick ``lo`` when ``hi`` is
    isolated from the right, else ``hi`` when ``lo`` is isolated from the
    left, else raise :class:`GapObstruction`.  ``character`` defaults to the
    finite classification (always isolated); pass an override to exercise
    the obstruction.
    """
    character = character or _finite_character
    chosen = []
    for k in f.codomain:
        fiber = f.fiber(k)
        if not fiber:
            raise NotRightInverse(f"{k!r} has an empty fiber; f is not onto")
        lo, hi = fiber[0], fiber[-1]
        if lo == hi:
            chosen.append(lo)
        elif character(f.domain, hi, Side.RIGHT) is CharClass.ISOLATED:
            chosen.append(lo)
        elif character(f.domain, lo, Side.LEFT) is CharClass.ISOLATED:
            chosen.append(hi)
        else:
            raise GapObstruction(f"fiber over {k!r} cannot be split", fiber=(lo, hi))
    return IncreasingMap(f.codomain, f.domain, tuple(chosen))


def projection_from_right_inverse(X: FiniteOrder, Y: Iterable, g: IncreasingMap) -> IncreasingMap:
    """Increasing map ``p : conv(Y) -> Y`` fixing ``Y``, read off from ``g``.

    For ``y`` in the convex hull let ``k = (y, ->)``.  The final segment
    ``{k' in K(Y) : g(k') <= k}`` of ``K(Y)`` starts at ``Y[i:]`` for some
    ``1 <= i <= |Y|`` and corresponds to the point ``Y[i - 1]``.
    """
    f = dual_inclusion(X, Y)
    if g.domain != f.codomain or g.codomain != f.domain or not f.compose(g).is_identity():
        raise NotRightInverse("f o g is not the identity on K(Y)")
    Ychain = f.codomain.source
    if len(Ychain) == 0:
        return IncreasingMap(FiniteOrder(()), Ychain, ())
    lo, hi = X.index(Ychain[0]), X.index(Ychain[-1])
    hull = FiniteOrder(X.labels[lo : hi + 1])
    KY = f.codomain

    def p(y):
        k = frozenset(X.labels[X.index(y) + 1 :])
        i = next(j for j, kk in enumerate(KY) if g(kk) <= k)
        return Ychain[i - 1]

    return IncreasingMap.from_function(hull, Ychain, p)


# -- presented suborders and gap semi-decision --------------------------------


@dataclass(frozen=True)
class SubOrderPresentation:
    """A suborder ``Y`` of ``ambient`` with constructive cut witnesses.

    ``left_witness(x, a)`` returns some ``a'`` in ``Y`` with ``a < a' < x``
    or None when it can certify there is none; ``right_witness(x, b)`` is
    the mirror image.  ``sample`` yields members of ``Y`` deterministically.
    """

    ambient: OrderExpr
    member: Callable[[Any], bool]
    sample: Callable[[], Iterator]
    left_witness: Callable[[Any, Any], Any]
    right_witness: Callable[[Any, Any], Any]
    sample_limit: int = 256
    label: str = ""

    def __contains__(self, x) -> bool:
        return contains(self.ambient, x) and bool(self.member(x))


def finite_presentation(ambient: OrderExpr, members: Iterable, label: str = "") -> SubOrderPresentation:
    """Present a finite ``Y`` inside ``ambient``; witnesses search ``Y`` exhaustively."""
    members = tuple(members)
    for m in members:
        if not contains(ambient, m):
            raise ForeignElement(f"{m!r} is not an element of {ambient}")
    keyset = frozenset(members)

    def left(x, a):
        above_a = [y for y in members if compare(ambient, a, y) < 0 and compare(ambient, y, x) < 0]
        return above_a[0] if above_a else None

    def right(x, b):
        below_b = [y for y in members if compare(ambient, x, y) < 0 and compare(ambient, y, b) < 0]
        return below_b[0] if below_b else None

    return SubOrderPresentation(
        ambient,
        keyset.__contains__,
        lambda: iter(members),
        left,
        right,
        sample_limit=max(len(members), 1),
        label=label or f"finite({len(members)})",
    )


class GapReason(enum.Enum):
    MEMBER = "member"
    NO_LEFT = "noLeft"
    NO_RIGHT = "noRight"
    MAX_BELOW = "maxBelow"
    MIN_ABOVE = "minAbove"
    NO_FILLER = "noFiller"


@dataclass(frozen=True)
class FillsToDepth:
    depth: int
    left_chain: tuple = ()
    right_chain: tuple = ()


@dataclass(frozen=True)
class NotGap:
    reason: GapReason
    left_chain: tuple = ()
    right_chain: tuple = ()


def _seeds(x, Y: SubOrderPresentation):
    """Greatest sampled member below ``x`` and least sampled member above it."""
    below = above = None
    for y in itertools.islice(Y.sample(), Y.sample_limit):
        c = compare(Y.ambient, y, x)
        if c < 0 and (below is None or compare(Y.ambient, y, below) > 0):
            below = y
        elif c > 0 and (above is None or compare(Y.ambient, y, above) < 0):
            above = y
    return below, above


def _run_chain(x, Y: SubOrderPresentation, start, depth: int, side: int):
    """Iterate a witness ``depth`` times; None in the result marks an Absent."""
    step = Y.left_witness if side < 0 else Y.right_witness
    chain = [start]
    cur = start
    for _ in range(depth):
        nxt = step(x, cur)
        if nxt is None:
            return tuple(chain), False
        if nxt not in Y:
            raise InvalidWitness(f"witness {nxt!r} is not a member of the suborder")
        # lower chain must climb toward x, upper chain must descend toward x
        if compare(Y.ambient, cur, nxt) != side or compare(Y.ambient, nxt, x) != side:
            raise InvalidWitness(f"witness {nxt!r} is not strictly between {cur!r} and {x!r}")
        chain.append(nxt)
        cur = nxt
    return tuple(chain), True


def fills_proper_gap(x, Y: SubOrderPresentation, depth: int) -> FillsToDepth | NotGap:
    """Semi-decide whether ``x`` fills a proper gap of ``Y``.

    Both witness chains are run ``depth`` steps, each step re-checked for
    strict monotonicity and for staying on its side of ``x``.
    """
    if not contains(Y.ambient, x):
        raise ForeignElement(f"{x!r} is not an element of {Y.ambient}")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if x in Y:
        return NotGap(GapReason.MEMBER)
    below, above = _seeds(x, Y)
    if below is None:
        return NotGap(GapReason.NO_LEFT)
    if above is None:
        return NotGap(GapReason.NO_RIGHT)
    left, ok = _run_chain(x, Y, below, depth, -1)
    if not ok:
        return NotGap(GapReason.MAX_BELOW, left_chain=left)
    right, ok = _run_chain(x, Y, above, depth, 1)
    if not ok:
        return NotGap(GapReason.MIN_ABOVE, left_chain=left, right_chain=right)
    return FillsToDepth(depth, left, right)


@dataclass(frozen=True)
class Filtration:
    """Increasing family of presented suborders indexed by ordinal codes.

    Only the structural conditions are recorded: ``stage(alpha)`` must grow
    with ``alpha``, be continuous at limits and exhaust the ambient order.
    Whether an outside point fills a proper gap of one stage is probed
    with :func:`fills_proper_gap`.
    """

    ambient: OrderExpr
    stage: Callable[[Any], SubOrderPresentation]
    indices: tuple

    def is_increasing_on(self, samples: Iterable) -> bool:
        samples = list(samples)
        for a, b in itertools.combinations(sorted(self.indices), 2):
            Xa, Xb = self.stage(a), self.stage(b)
            if any(s in Xa and s not in Xb for s in samples):
                return False
        return True

    def is_continuous_on(self, samples: Iterable, below: Mapping[Any, Iterable]) -> bool:
        """At each limit ``lam`` in ``below``, membership equals membership in some earlier stage."""
        samples = list(samples)
        for lam, earlier in below.items():
            earlier = list(earlier)
            X_lam = self.stage(lam)
            for s in samples:
                if (s in X_lam) != any(s in self.stage(a) for a in earlier):
                    return False
        return True

    def violations_of_gap_condition(self, alpha, candidates: Iterable, depth: int) -> list:
        """Candidates that fill a proper gap of ``stage(alpha)`` to ``depth``."""
        Xa = self.stage(alpha)
        return [x for x in candidates if isinstance(fills_proper_gap(x, Xa, depth), FillsToDepth)]
