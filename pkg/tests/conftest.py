from math import gcd

import numpy as np
import pytest
from hypothesis import strategies as st

from ltsig import kernels

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


def eig_signature(matrix: np.ndarray) -> int:
    """Brute-force oracle: signs of numpy eigenvalues of a hermitian matrix."""
    if matrix.size == 0:
        return 0
    ev = np.linalg.eigvalsh(matrix)
    assert np.min(np.abs(ev)) > 1e-8, "oracle point too close to a root"
    return int(np.sum(ev > 0) - np.sum(ev < 0))


def numpy_form(v, x) -> np.ndarray:
    a = np.array(v.entries, dtype=float).reshape(v.size, v.size)
    w = np.exp(2j * np.pi * float(x))
    return (1 - w) * a + (1 - np.conj(w)) * a.T


coprime_pairs = st.tuples(st.integers(1, 9), st.integers(1, 9)).filter(lambda t: gcd(*t) == 1)
