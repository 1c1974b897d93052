import numpy as np
import pytest

from staralg import cyclic_group, function_algebra, matrix_algebra, semigroup_algebra, symmetric_group


def _catalog():
    algebras = {f"M{n}": matrix_algebra(n) for n in (1, 2, 3)}
    for k in (1, 2, 5, 8):
        algebras[f"F{k}"] = function_algebra([f"p{i}" for i in range(k)])
    for n in (2, 4, 6):
        algebras[f"Z{n}"] = semigroup_algebra(cyclic_group(n))
    algebras["S3"] = semigroup_algebra(symmetric_group(3))
    return algebras


CATALOG = _catalog()


@pytest.fixture(params=sorted(CATALOG), ids=sorted(CATALOG))
def catalog_algebra(request):
    return CATALOG[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def unit_disk(rng, size):
    r = np.sqrt(rng.uniform(size=size))
    return r * np.exp(2j * np.pi * rng.uniform(size=size))


ACCEPTANCE_LOG: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LOG.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
