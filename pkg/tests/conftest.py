from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

_criteria = {}


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; its line is printed in the summary."""
    state = {}

    def start(label: str):
        state["label"] = label

    yield start
    label = state.get("label")
    if label:
        rep = getattr(request.node, "rep_call", None)
        _criteria[label] = "PASS" if rep is not None and rep.passed else "FAIL"


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(f"{label} {_criteria[label]}")
