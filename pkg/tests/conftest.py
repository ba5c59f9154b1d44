import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call" and key == "passed":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                rows.append((int(m.group(1)), m.group(2).replace("_", " "), "PASS" if key == "passed" else "FAIL",
                             getattr(rep, "duration", 0.0)))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, verdict, secs in sorted(rows):
        terminalreporter.write_line(f"criterion {num:2d} {verdict}  {name} ({secs:.1f}s)")
