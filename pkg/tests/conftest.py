import pytest

from subspace_codes import KKCode
from subspace_codes.field import get_field

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def f8():
    return get_field(2, 3)


@pytest.fixture
def f16():
    return get_field(2, 4)


@pytest.fixture
def kk331():
    return KKCode.create(2, 3, 3, 1)


@pytest.fixture
def kk332():
    return KKCode.create(2, 3, 3, 2)
