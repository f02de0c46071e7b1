"""Brute-force ground truth on small finite chains.

Everything here is computed by exhaustive enumeration that does not reuse
the constructions it checks: final segments are found by filtering all
subsets, increasing maps by filtering all functions.  A finite chain is
determined up to unique isomorphism by its size, so "every order of size
n" means the single chain ``0 < 1 < ... < n-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .duality import (
    IncreasingMap,
    dual_inclusion,
    k_finite,
    projection_from_right_inverse,
    right_inverse_from_gaps,
    x_finite,
)
from .errors import BoundExceeded, OrderError
from .orders import FiniteOrder

__all__ = [
    "OracleReport",
    "all_final_segments",
    "all_increasing_maps",
    "check_iso",
    "exhaustive_lemma33",
    "exhaustive_duality",
    "replay",
    "SEGMENT_BOUND",
    "MAP_BOUND",
    "SUITE_BOUND",
]

SEGMENT_BOUND = 12
MAP_BOUND = 1_000_000
SUITE_BOUND = 8


@dataclass
class OracleReport:
    instance: str
    property: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **case):
        self.failures.append(case)


def all_final_segments(X: FiniteOrder, bound: int = SEGMENT_BOUND) -> list[frozenset]:
    """Every upward-closed subset of ``X``, largest first."""
    if len(X) > bound:
        raise BoundExceeded(f"|X| = {len(X)} exceeds segment bound {bound}")
    pos = {x: i for i, x in enumerate(X.labels)}
    found = []
    for r in range(len(X), -1, -1):
        for subset in itertools.combinations(X.labels, r):
            s = set(subset)
            if all(y in s for x in s for y in X.labels if pos[y] > pos[x]):
                found.append(frozenset(s))
    return found


def all_increasing_maps(X: FiniteOrder, Y: FiniteOrder, bound: int = MAP_BOUND) -> list[IncreasingMap]:
    if len(Y) ** len(X) > bound:
        raise BoundExceeded(f"{len(Y)}^{len(X)} candidate maps exceed bound {bound}")
    maps = []
    for table in itertools.product(Y.labels, repeat=len(X)):
        ranks = [Y.index(y) for y in table]
        if all(a <= b for a, b in zip(ranks, ranks[1:])):
            maps.append(IncreasingMap(X, Y, table))
    return maps


def check_iso(X: FiniteOrder, Y: FiniteOrder) -> IncreasingMap | None:
    """The unique order isomorphism ``X -> Y``, or None if the sizes differ."""
    if len(X) != len(Y):
        return None
    return IncreasingMap(X, Y, Y.labels)


def _chain(n: int) -> FiniteOrder:
    return FiniteOrder.chain(n)


def _subsets(labels):
    return itertools.chain.from_iterable(itertools.combinations(labels, r) for r in range(len(labels) + 1))


def _check_bound(n_max: int):
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > SUITE_BOUND:
        raise BoundExceeded(f"n_max = {n_max} exceeds suite bound {SUITE_BOUND}")


def lemma33_case(n: int, subset) -> list[str]:
    """Failed checks for ``X = chain(n)``, ``Y = subset``; empty when all hold."""
    X = _chain(n)
    Y = frozenset(subset)
    problems = []
    f = dual_inclusion(X, Y)
    if list(f.domain.labels) != all_final_segments(X):
        problems.append("K(X) differs from brute-force final segments")
    if list(f.codomain.labels) != all_final_segments(X.restrict(Y)):
        problems.append("K(Y) differs from brute-force final segments")
    if not f.is_increasing() or not f.is_surjective():
        problems.append("f is not an increasing surjection")
    try:
        g = right_inverse_from_gaps(f)
        p = projection_from_right_inverse(X, Y, g)
    except OrderError as exc:
        return problems + [f"construction raised {type(exc).__name__}: {exc}"]
    if not f.compose(g).is_identity():
        problems.append("f o g != id")
    if not g.is_increasing():
        problems.append("g not increasing")
    if not p.is_increasing():
        problems.append("p not increasing")
    if any(p(y) != y for y in Y):
        problems.append("p does not fix Y")
    if Y:
        lo, hi = min(Y), max(Y)
        if set(p.domain.labels) != set(range(lo, hi + 1)):
            problems.append("p is not defined on exactly conv(Y)")
    return problems


def exhaustive_lemma33(n_max: int) -> OracleReport:
    """Right inverse and projection recipes on every ``Y <= X``, ``|X| <= n_max``."""
    _check_bound(n_max)
    report = OracleReport(f"chains of size <= {n_max}, all subsets", "lemma33")
    for n in range(n_max + 1):
        for subset in _subsets(range(n)):
            report.cases += 1
            for problem in lemma33_case(n, subset):
                report.fail(
                    suite="lemma33",
                    n=n,
                    subset=list(subset),
                    check=problem,
                    replay=f"compact-lines oracle lemma33 --n {n}",
                )
    return report


def duality_case(n: int, k_builder: Callable = k_finite, x_builder: Callable = x_finite) -> list[str]:
    problems = []
    X = _chain(n)
    K = k_builder(X)
    if list(K.labels) != all_final_segments(X):
        problems.append("K(X) differs from brute-force final segments")
    if len(K) != n + 1:
        problems.append(f"|K(X)| = {len(K)}, expected {n + 1}")
    XK = x_builder(K)
    iso = check_iso(X, XK)
    if iso is None:
        problems.append("X(K(X)) not isomorphic to X")
    else:
        # the canonical map x -> {F : x not in F} must be the isomorphism
        if any(iso(x) != frozenset(F for F in K if x not in F) for x in X):
            problems.append("X -> X(K(X)) is not the canonical map")
    if n >= 1:
        Kc = _chain(n)
        XKc = x_builder(Kc)
        KXKc = k_builder(XKc)
        iso = check_iso(Kc, KXKc)
        if iso is None:
            problems.append("K(X(K)) not isomorphic to K")
        elif any(iso(k) != frozenset(F for F in XKc if k not in F) for k in Kc):
            problems.append("K -> K(X(K)) is not the canonical map")
    return problems


def functoriality_case(n: int, Y, Z) -> list[str]:
    X = _chain(n)
    Yc = X.restrict(Y)
    outer = dual_inclusion(X, Y)
    inner = dual_inclusion(Yc, Z)
    direct = dual_inclusion(X, Z)
    if inner.compose(outer).table != direct.table:
        return ["dual(Y->Z) o dual(X->Y) != dual(X->Z)"]
    return []


def exhaustive_duality(
    n_max: int,
    k_builder: Callable = k_finite,
    x_builder: Callable = x_finite,
    functor_max: int = 5,
) -> OracleReport:
    """Round trips ``X(K(X)) = X`` and ``K(X(K)) = K`` plus contravariant functoriality.

    ``k_builder``/``x_builder`` can be swapped for mutated versions to check
    that the suite notices.
    """
    _check_bound(n_max)
    report = OracleReport(f"chains of size <= {n_max}", "duality")
    for n in range(n_max + 1):
        report.cases += 1
        try:
            problems = duality_case(n, k_builder, x_builder)
        except (OrderError, ValueError) as exc:
            problems = [f"construction raised {type(exc).__name__}: {exc}"]
        for problem in problems:
            report.fail(suite="duality", n=n, check=problem, replay=f"compact-lines oracle duality --n {n}")
    for n in range(min(n_max, functor_max) + 1):
        for Y in _subsets(range(n)):
            for Z in _subsets(Y):
                report.cases += 1
                for problem in functoriality_case(n, Y, Z):
                    report.fail(
                        suite="functoriality",
                        n=n,
                        subset=list(Y),
                        subsubset=list(Z),
                        check=problem,
                        replay=f"compact-lines oracle duality --n {n}",
                    )
    return report


def replay(failure: dict) -> list[str]:
    """Re-run the single case a report failure describes."""
    suite = failure["suite"]
    if suite == "lemma33":
        return lemma33_case(failure["n"], failure["subset"])
    if suite == "duality":
        return duality_case(failure["n"])
    if suite == "functoriality":
        return functoriality_case(failure["n"], failure["subset"], failure["subsubset"])
    raise ValueError(f"unknown suite {suite!r}")

