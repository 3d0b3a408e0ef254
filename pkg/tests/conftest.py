import pytest

from ncdiff.algebra import ZOO_NAMES, zoo
from ncdiff.bimodule import regular


@pytest.fixture(params=ZOO_NAMES)
def algebra(request):
    return zoo(request.param)


@pytest.fixture
def dual():
    return zoo("dual")


@pytest.fixture
def m2():
    return zoo("m2")


def lm(P, Q, rows):
    from ncdiff.exactla import Matrix
    from ncdiff.homspace import LinearMap
    return LinearMap(P, Q, Matrix(rows, P.dim))


@pytest.fixture
def dual_ops(dual):
    R = regular(dual)
    return {"E": lm(R, R, [[0, 1], [0, 0]]), "euler": lm(R, R, [[0, 0], [0, 1]])}


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
