import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# Registry the acceptance module fills with (label, passed, detail) tuples so
# the final terminal summary always shows one line per criterion, including
# for passing tests whose captured stdout pytest would otherwise hide.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_LINES:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line("%s: %s — %s" % (label, status, detail))
