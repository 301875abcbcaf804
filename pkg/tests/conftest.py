import itertools

import pytest
from hypothesis import strategies as st

from hexcactus.cactus_graph import AttachmentSequence, AttachmentType


def sequences(max_n):
    """Hypothesis strategy for attachment sequences with at most ``max_n`` hexagons."""
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.sampled_from(list(AttachmentType)), min_size=max(n - 2, 0), max_size=max(n - 2, 0)).map(
            lambda cs: AttachmentSequence(n, tuple(cs))
        )
    )


def all_sequences(n):
    for choices in itertools.product(AttachmentType, repeat=max(n - 2, 0)):
        yield AttachmentSequence(n, choices)


@pytest.fixture
def seq():
    return AttachmentSequence.from_string


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, outcome in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{cid}: {title}")
