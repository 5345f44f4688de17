import numpy as np
import pytest

from chwt import _kernels_numpy

KERNEL_BACKENDS = [_kernels_numpy]
try:
    from chwt import _kernels_numba
except ImportError:  # pragma: no cover
    pass
else:
    KERNEL_BACKENDS.insert(0, _kernels_numba)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=KERNEL_BACKENDS, ids=lambda k: k.NAME)
def kernel_backend(request):
    return request.param


def random_int_signal(rng, m, bound=2**20):
    return rng.integers(-bound, bound, size=2**m, dtype=np.int64)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
