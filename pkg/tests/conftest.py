import pytest

from corpora import FIGURE1, to_assignments
from tagrec.model import build_folksonomy


@pytest.fixture
def fig1():
    return build_folksonomy(to_assignments(FIGURE1))


@pytest.fixture
def fig1_jsonl(tmp_path):
    path = tmp_path / "fig1.jsonl"
    path.write_text(
        '{"user": "alice", "uri": "GW", "tags": ["ajax", "programming", "web", "google"]}\n'
        '{"user": "bob", "uri": "WK", "tags": ["ajax", "programming", "web", "java"]}\n'
        '{"user": "carol", "uri": "SW", "tags": ["web", "mail"]}\n'
    )
    return path


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        item.config._criteria.append((marker.args[0], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, duration in config._criteria:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  ({duration:.2f}s)")
