"""Shared fixtures.  The ``acceptance`` fixture records one line per criterion
and the lines are printed in the terminal summary."""

import contextlib

import pytest

_RESULTS = pytest.StashKey[list]()


class AcceptanceRecorder:
    def __init__(self, results: list):
        self.results = results

    @contextlib.contextmanager
    def check(self, label: str, title: str):
        try:
            yield
        except pytest.skip.Exception as exc:
            self.results.append((label, "SKIP", f"{title} ({exc.msg})"))
            raise
        except BaseException:
            self.results.append((label, "FAIL", title))
            raise
        self.results.append((label, "PASS", title))


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def acceptance(request):
    return AcceptanceRecorder(request.config.stash[_RESULTS])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance summary")
    for label, status, title in results:
        terminalreporter.write_line(f"{label:<17} {status:<4}  {title}")
