import sys

import pytest

from mpemc.bipartite import to_bipartite
from mpemc.instance import Instance

# nodes a=0, b=1, c=2
PATH = Instance(3, [(0, 1, 1), (1, 2, 2)], [1, 2, 1])
# nodes u=0, v=1, w=2; costs uv:1, vw:2, uw:3
TRIANGLE = Instance(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)], [1, 1, 1])


@pytest.fixture
def path():
    return PATH


@pytest.fixture
def triangle():
    return TRIANGLE


@pytest.fixture
def path_bip():
    # edges: 0 = a_a b_b, 1 = a_b b_a, 2 = a_b b_c, 3 = a_c b_b
    return to_bipartite(PATH)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = [mod.RESULTS[n] for n in sorted(mod.RESULTS)] if mod else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
