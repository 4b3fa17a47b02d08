import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from toricdeg.lattice import make_surface

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SURFACES = ["X1", "X2", "X3", "X4", "X5", "X6", "L3", "S6"]

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture(scope="session")
def surfaces():
    return {name: make_surface(name) for name in SURFACES + ["X7", "X8"]}


def random_effective(S, rng: random.Random, integral=False, terms=4, max_coeff=3):
    """A nonnegative combination of effective generators."""
    D = [Fraction(0)] * S.rank
    for _ in range(rng.randint(1, terms)):
        g = rng.choice(S.effective_generators)
        c = Fraction(rng.randint(1, max_coeff)) if integral else Fraction(rng.randint(1, 12), rng.randint(1, 4))
        for i in range(S.rank):
            D[i] += c * g[i]
    return tuple(int(x) for x in D) if integral else tuple(D)


def random_big(S, rng: random.Random, integral=True, terms=3, max_coeff=2):
    """``m(-K)`` plus a random effective divisor; big because -K is big and nef."""
    m = rng.randint(1, 2)
    E = random_effective(S, rng, integral=integral, terms=terms, max_coeff=max_coeff)
    return tuple(m * k + e for k, e in zip(S.anticanonical, E))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(f"{name} {ACCEPTANCE_RESULTS[name]}")
