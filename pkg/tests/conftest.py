import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Collects one pass/fail line per acceptance criterion; the lines are
    echoed in the terminal summary so they survive output capture."""

    def record(criterion: int, title: str, ok: bool, detail: str) -> None:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"criterion {criterion} [{title}]: {status} ({detail})")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.line(line)
