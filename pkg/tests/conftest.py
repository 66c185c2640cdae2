import sys


def pytest_terminal_summary(terminalreporter):
    # repeat the acceptance PASS/FAIL lines after the run, even when output is captured
    for module in list(sys.modules.values()):
        if getattr(module, "__name__", "").endswith("test_acceptance"):
            lines = getattr(module, "RESULTS", [])
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
            return
