import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for _, result in sorted(acc.RESULTS.items()):
        terminalreporter.write_line(result.report())
