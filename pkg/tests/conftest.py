import pytest

from cubicsurf.chars import load_character_table
from cubicsurf.weyl import weyl_group

_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def G():
    return weyl_group()


@pytest.fixture(scope="session")
def table():
    return load_character_table()


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion for the terminal summary."""

    def record(number: int, ok: bool, detail: str = "") -> bool:
        _CRITERIA[number] = (bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok, detail = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
