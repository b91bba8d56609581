import pytest

# (criterion number, name, passed, detail) rows collected by test_acceptance
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {num:>2}  {name}: {detail}")


@pytest.fixture
def record():
    def _record(num: int, name: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS.append((num, name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} criterion {num} ({name}): {detail}")

    return _record
