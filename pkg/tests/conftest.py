import sys

import numpy as np
import pytest

from hillperm.modlinalg import is_invertible_mod


@pytest.fixture
def rng():
    return np.random.default_rng(20241018)


def random_invertible(rng, n, modulus, high=None):
    high = modulus if high is None else high
    while True:
        A = rng.integers(0, high, size=(n, n))
        if is_invertible_mod(A, modulus):
            return A


def random_block(rng, n, modulus=128):
    return rng.integers(0, modulus, size=(n, 2))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.format_line(number))
