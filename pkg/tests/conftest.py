import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""
    name = request.node.name

    def record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE[name] = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE.values():
            terminalreporter.write_line(line)
