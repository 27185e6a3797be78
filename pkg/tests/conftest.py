import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewmrd.gf import field_create, least_irreducible_kpoly  # noqa: E402
from skewmrd.quotient import QuotientRing  # noqa: E402
from skewmrd.skewpoly import SkewRing  # noqa: E402

ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def r4():
    """F_4[x; sigma], sigma = squaring, K = F_2."""
    return SkewRing(field_create(2, 2), 1, 2)


@pytest.fixture(scope="session")
def r9():
    """F_9[x; sigma], sigma = cubing, K = F_3."""
    return SkewRing(field_create(3, 2), 1, 2)


@pytest.fixture(scope="session")
def q22():
    """R_F at q = 2, n = s = 2 with F = y^2 + y + 1."""
    L = field_create(2, 2)
    ring = SkewRing(L, 1, 2)
    return QuotientRing(ring, least_irreducible_kpoly(L, 1, 2))


@pytest.fixture(scope="session")
def q32():
    """R_F at q = 3, n = s = 2 with F = y^2 + 1."""
    L = field_create(3, 2)
    ring = SkewRing(L, 1, 2)
    return QuotientRing(ring, least_irreducible_kpoly(L, 1, 2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
