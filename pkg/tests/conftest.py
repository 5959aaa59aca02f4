import sys
import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cohspace.coherent_spaces import build_space
from cohspace.fock import TruncationPolicy

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

TRUNC64 = TruncationPolicy(64)


def separated(labels, min_sep=0.5):
    return all(abs(a - b) >= min_sep for i, a in enumerate(labels) for b in labels[:i])


def disk_label(radius=2.0):
    return st.builds(lambda r, t: complex(radius * np.sqrt(r) * np.exp(2j * np.pi * t)),
                     st.floats(0, 1), st.floats(0, 1))


def label_lists(min_size=1, max_size=4, radius=2.0, min_sep=0.5):
    return st.lists(disk_label(radius), min_size=min_size, max_size=max_size).filter(
        lambda ls: separated(ls, min_sep))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def two_point():
    return build_space([0, 1])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
