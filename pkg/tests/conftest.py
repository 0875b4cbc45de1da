import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion under the given label."""
    name = request.node.name

    def record(label, ok, detail=""):
        _RESULTS.setdefault(label, []).append((name, ok, detail))
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS, key=lambda s: (len(s.split(".")[0]), s)):
        for name, ok, detail in _RESULTS[label]:
            terminalreporter.write_line(f"criterion {label}: {'PASS' if ok else 'FAIL'} {detail} [{name}]".rstrip())
