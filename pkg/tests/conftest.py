import random

import pytest

from doodleswitch.data import example_diagrams, example_switches
from doodleswitch.gauss import random_code
from doodleswitch.switch import enumerate_switches, projection_switch


@pytest.fixture(scope="session")
def switches():
    return example_switches()


@pytest.fixture(scope="session")
def A(switches):
    return switches["T"]


@pytest.fixture(scope="session")
def diagrams():
    return example_diagrams()


@pytest.fixture(scope="session")
def U(diagrams):
    return diagrams["U"]


@pytest.fixture(scope="session")
def d31(diagrams):
    return diagrams["d31"]


@pytest.fixture(scope="session")
def battery(switches):
    """A, A', A'', the order-3 projection and every order-3 switch."""
    return list(switches.values()) + [projection_switch(3)] + enumerate_switches(3)


def random_codes(seed, count, max_crossings, max_components=2):
    rng = random.Random(seed)
    return [random_code(rng, rng.randint(0, max_crossings), rng.randint(1, max_components))
            for _ in range(count)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
