import itertools
import random
from fractions import Fraction

import pytest

from compact_lines.ordinals import OrdCode
from compact_lines.orders import Dup, Fin, KurepaX, LexQ, Omega, Rationals, Rev, Sum, iter_elements
from compact_lines.points import YPoint, vec

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} - {detail}")


VALUES = [Fraction(v) for v in (-2, -1, Fraction(-1, 2), Fraction(1, 2), 1, 2)]


def random_vec(rng, max_level=30, max_b=6, max_len=4):
    coords = {}
    for _ in range(rng.randint(0, max_len)):
        coords[OrdCode(rng.randrange(max_level), rng.randint(0, max_b))] = rng.choice(VALUES)
    return vec(coords)


def near_y_vec(rng, delta, max_b=6):
    """Vector agreeing with y(delta) on a prefix, then possibly perturbed.

    These land close to the filler, where comparisons are hardest.
    """
    n = rng.randint(0, max_b)
    coords = {delta.fs(i): Fraction(1) for i in range(n)}
    if rng.random() < 0.7:
        coords[delta.fs(n)] = rng.choice(VALUES + [Fraction(0)])
    if rng.random() < 0.3:
        coords[OrdCode(rng.randrange(delta.a), rng.randint(0, max_b))] = rng.choice(VALUES)
    return vec(coords)


def random_point(rng, S, max_level=30):
    r = rng.random()
    if S and r < 0.3:
        return YPoint(rng.choice(S))
    if S and r < 0.65:
        return near_y_vec(rng, rng.choice(S))
    return random_vec(rng, max_level)


def random_ord(rng, limit=False):
    a = rng.randint(1 if limit else 0, 6)
    return OrdCode(a, 0 if limit else rng.randint(0, 4))


def random_expr(rng, depth=0):
    r = rng.random() if depth < 3 else rng.random() * 0.45
    if r < 0.15:
        return Fin(rng.randint(0, 5))
    if r < 0.25:
        return Omega()
    if r < 0.32:
        return Rationals()
    if r < 0.38:
        return LexQ(random_ord(rng))
    if r < 0.45:
        kappa = OrdCode(rng.randint(1, 6), rng.randint(0, 2))
        S = {OrdCode(a, 0) for a in range(1, kappa.a + (kappa.b > 0)) if rng.random() < 0.5}
        return KurepaX(kappa, S)
    if r < 0.6:
        return Rev(random_expr(rng, depth + 1))
    if r < 0.8:
        return Sum(random_expr(rng, depth + 1), random_expr(rng, depth + 1))
    inner = random_expr(rng, depth + 1)
    pool = list(itertools.islice(iter_elements(inner), 12))
    return Dup(inner, set(rng.sample(pool, rng.randint(0, min(3, len(pool))))))


@pytest.fixture
def rng():
    return random.Random(20240611)
