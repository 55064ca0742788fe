import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion, then assert it."""

    def check(ok: bool, summary: str):
        name = request.node.name.removeprefix("test_")
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}: {summary}")
        assert ok, summary

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
