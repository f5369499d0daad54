from __future__ import annotations

from collections import defaultdict

import pytest

CRITERIA = {
    1: "exact family equalities (LP vs closed forms)",
    2: "integer k-metric dimension (branch-and-bound vs closed forms)",
    3: "oracle equivalence (branch-and-bound vs exhaustive search)",
    4: "property suite",
    5: "parametric convexity and path breakpoint",
    6: "LP solver vs basic-solution enumeration, anti-cycling",
}

_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[crit].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, desc in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status:7} {desc} ({len(results or [])} tests)")


@pytest.fixture
def run_cli(capsys):
    from fkdim.cli import main

    def run(*argv):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse usage errors
            code = exc.code
        out = capsys.readouterr()
        return code, out.out, out.err

    return run
