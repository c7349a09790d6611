import pytest

_RESULTS: list[tuple[str, bool, float]] = []


class AcceptanceLog:
    def record(self, name: str, ok: bool, seconds: float) -> None:
        _RESULTS.append((name, ok, seconds))
        print(f"[{'PASS' if ok else 'FAIL'}] {name} ({seconds:.2f}s)")


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds in _RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name} ({seconds:.2f}s)")
