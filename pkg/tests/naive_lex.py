"""Independent lexicographic comparison over plain tuples.

Points are expanded into ``{(a, b): value}`` dicts over a finite window that
is provably wide enough for the pair at hand; the first key (in plain tuple
order) where the dicts disagree decides.  Shares no code with the library's
merged-stream scan.
"""
from fractions import Fraction

from compact_lines.points import Vec, YPoint


def _raw(p, window):
    if isinstance(p, Vec):
        return {(k.a, k.b): v for k, v in p.entries}
    a = p.delta.a
    return {(a - 1, m): Fraction(1) for m in range(1, window + 1)}


def naive_compare(p, q):
    bs = [k.b for x in (p, q) if isinstance(x, Vec) for k, _ in x.entries]
    window = max(bs, default=0) + 3
    dp, dq = _raw(p, window), _raw(q, window)
    for key in sorted(set(dp) | set(dq)):
        x, y = dp.get(key, 0), dq.get(key, 0)
        if x != y:
            return -1 if x < y else 1
    return 0


def naive_coord(p, a, b):
    if isinstance(p, YPoint):
        return Fraction(1) if (a == p.delta.a - 1 and b >= 1) else Fraction(0)
    return {(k.a, k.b): v for k, v in p.entries}.get((a, b), Fraction(0))
