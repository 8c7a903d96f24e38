import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """Print one line per acceptance criterion after the test run."""
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(mod.RESULTS):
        status, description = mod.RESULTS[number]
        terminalreporter.write_line(f"  {status} criterion {number}: {description}")
