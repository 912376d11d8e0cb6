import pytest

from simpleslice import SeifertMatrix, mirror, preset
from simpleslice.corpus import load_knot_table

TREFOIL = [[-1, 1], [0, -1]]
TORUS_2_5 = [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]


@pytest.fixture
def trefoil():
    return SeifertMatrix(TREFOIL)


@pytest.fixture
def torus25():
    """Bidiagonal T(2,5) matrix; signature -4."""
    return SeifertMatrix(TORUS_2_5)


@pytest.fixture
def torus25_mirror():
    """-V^T of the bidiagonal matrix: the signature +4 knot called T(-2,5)."""
    return mirror(SeifertMatrix(TORUS_2_5))


@pytest.fixture
def unknot():
    return SeifertMatrix([])


@pytest.fixture
def cp2():
    return preset("CP2")


@pytest.fixture(scope="session")
def corpus():
    return load_knot_table()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
