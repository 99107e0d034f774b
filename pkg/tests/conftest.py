import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def criterion_log(request):
    """Call with (number, title, ok, detail) to add a line to the summary."""
    lines = request.config.stash[_LINES_KEY]

    def log(number, title, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        lines.append(f"{status} criterion {number}: {title}" + (f" ({detail})" if detail else ""))

    return log


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
