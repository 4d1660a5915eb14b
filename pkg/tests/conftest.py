from contextlib import contextmanager

import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


@contextmanager
def _criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        _RESULTS[number] = (False, title)
        print(f"CRITERION {number} FAIL: {title}")
        raise
    _RESULTS[number] = (True, title)
    print(f"CRITERION {number} PASS: {title}")


@pytest.fixture
def criterion():
    """Context manager recording one pass/fail line per acceptance criterion."""
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, title = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
