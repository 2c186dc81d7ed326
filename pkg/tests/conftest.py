import contextlib

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cantorspace import BINARY, LevelSystem, SequenceDescriptor

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

BIN = LevelSystem.homogeneous(BINARY)

_CRITERIA: dict[str, bool] = {}


def descriptors(symbols=(0, 1), max_pre=4, max_per=4):
    sym = st.sampled_from(symbols)
    return st.builds(
        SequenceDescriptor,
        st.lists(sym, max_size=max_pre).map(tuple),
        st.lists(sym, min_size=1, max_size=max_per).map(tuple),
    )


@contextlib.contextmanager
def criterion(label: str):
    """Record and print a pass/fail line for one acceptance criterion."""
    try:
        yield
    except BaseException:
        _CRITERIA[label] = False
        print(f"FAIL  {label}")
        raise
    _CRITERIA[label] = True
    print(f"PASS  {label}")


@pytest.fixture
def binary():
    return BIN


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if _CRITERIA[label] else 'FAIL'}  {label}")
