import acceptance_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = acceptance_log.summary_lines()
    if not lines:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
