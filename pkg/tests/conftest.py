import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from eckardt.algebra import PolyRing, PrimeField
from eckardt.groebner import certify_all

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(autouse=True)
def certified_bases(request):
    """Certify every Groebner basis a test produces (skipped for the long acceptance runs)."""
    if request.node.get_closest_marker("no_certify"):
        yield None
        return
    with certify_all() as sizes:
        yield sizes


def pytest_configure(config):
    config.addinivalue_line("markers", "no_certify: do not certify every Groebner basis in this test")


def random_poly(rng: random.Random, R: PolyRing, terms: int = 4, degree: int = 3):
    """A polynomial with up to ``terms`` random monomials of total degree <= ``degree``."""
    out = R.zero
    for _ in range(terms):
        exps = [0] * R.nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(R.nvars)] += 1
        out = out + R.monomial(exps, rng.randint(-5, 5))
    return out


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
small_primes = st.sampled_from([5, 7, 11, 13])


def fp_ring(p: int, n: int = 3, names: str = "xyzwv") -> PolyRing:
    return PolyRing(PrimeField(p), tuple(names[:n]))


# one (number, verdict, detail) entry per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {verdict} - {detail}")
