import random

import pytest
from hypothesis import HealthCheck, settings

from og6lattice import _linalg as la
from og6lattice.lattice import standard_lattice

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

OG6 = standard_lattice(3, 2)
E1, F1, E2, F2, E3, F3, ZETA, EPS = range(8)


def unit(i, n=8):
    return tuple(int(i == j) for j in range(n))


def og6(*pairs):
    """OG6 vector from (index, coefficient) pairs."""
    c = [0] * 8
    for i, a in pairs:
        c[i] += a
    return OG6.vector(c)


@pytest.fixture
def rng():
    return random.Random(1234)


def random_isometry_matrix(rng, pool, length):
    m = la.identity(len(pool[0].matrix))
    for _ in range(length):
        g = rng.choice(pool)
        gm = g.matrix if rng.random() < 0.5 else la.int_inverse(g.matrix)
        m = la.matmul(gm, m)
    return m


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
