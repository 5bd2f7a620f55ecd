import pytest

from plotkin_rs import field_new, triple_new
from plotkin_rs._backend import kernel_classes
from plotkin_rs import rs as rs_module


@pytest.fixture(scope="session")
def gf4():
    return field_new(2)


@pytest.fixture(scope="session")
def gf16():
    return field_new(4)


@pytest.fixture(scope="session")
def gf256():
    return field_new(8)


@pytest.fixture(scope="session")
def desk(gf16):
    """GF(16), n=15, k=(11, 9, 5): d0 = 11, radius 5."""
    return triple_new(gf16, 15, 11, 9, 5)


@pytest.fixture(scope="session")
def table1(gf256):
    """GF(256), n=128, k=(98, 82, 36): (384, 216, 93)."""
    return triple_new(gf256, 128, 98, 82, 36)


@pytest.fixture(params=sorted(kernel_classes()))
def kernel_cls(request):
    return kernel_classes()[request.param]


def clmul_mod(x, y, poly, m):
    """Carry-less product reduced modulo poly; independent of any table."""
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
        if x >> m & 1:
            x ^= poly
    return acc


_RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = []


@pytest.fixture
def acceptance_report(request):
    lines = request.config.stash[_RESULTS_KEY]

    def report(criterion, description, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {description}"
        if detail:
            line += f" ({detail})"
        lines.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_RESULTS_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
