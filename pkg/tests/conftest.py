import pytest

GRID = (1.2, 1.5, 2.0, 2.3, 2.5725, 3.0, 5.0)

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(params=GRID, ids=lambda p: f"p={p}")
def p_grid(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
