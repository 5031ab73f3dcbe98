from __future__ import annotations

import pytest

from pathattr import io
from corpus import corpus

FIG2_IDS = ["AB", "AC", "BD", "CD", "DE", "DF", "EG", "FG"]

_acceptance: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        _acceptance.append((str(number), title, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_acceptance, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")


@pytest.fixture(scope="session")
def fig2():
    return io.read_document(io.bundled_path("fig2.json"))


@pytest.fixture(scope="session")
def fig2_graph(fig2):
    return fig2.graph


@pytest.fixture(scope="session")
def fig2_paths(fig2):
    return fig2.path_set("P")


@pytest.fixture(scope="session")
def capacity_example():
    return io.read_document(io.bundled_path("capacity_example.json"))


@pytest.fixture(scope="session")
def random_corpus():
    return corpus(200)


@pytest.fixture(scope="session")
def disjoint_corpus():
    return corpus(100, disjoint=True)
