def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(test_acceptance.RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())
