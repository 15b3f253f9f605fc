"""Terminal summary for the acceptance suite.

Collects the outcome of every test_criterion_* test in test_acceptance.py and
prints one verdict line per criterion after the normal pytest output.
"""

import os

_TITLES = {
    1: "critical locus at the origin parameters",
    2: "homology matrices of the six generators",
    3: "finite symmetry representation structure",
    4: "congruence image of twist words",
    5: "word normal form round-trip",
    6: "intersection forms and cokernels",
    7: "link monodromy of the (-1,-1,-1) cycle",
    8: "twenty-four lines and their class Gram",
    9: "torus and sphere trace identities",
    10: "affine stabilizer case orders",
    11: "singular fiber multiplicity total",
}

_RESULTS = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    try:
        num = int(name.split("_")[2])
    except ValueError:
        return
    if report.when == "call":
        _RESULTS[num] = report.outcome
    elif report.outcome == "failed" and num not in _RESULTS:
        # setup (import/collection) errors count as failures of the criterion
        _RESULTS[num] = "failed"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.ensure_newline()
    tr.section("acceptance criteria")
    for num in sorted(_RESULTS):
        verdict = "PASS" if _RESULTS[num] == "passed" else "FAIL"
        tr.write_line("criterion %2d  %-42s %s" % (num, _TITLES.get(num, "?"), verdict))
    if 5 in _RESULTS:
        if os.environ.get("CHARCUBIC_ACCEPTANCE_FULL"):
            tr.write_line("criterion 5 ran the full word-length envelope (bulk lengths 1..12).")
        else:
            tr.write_line(
                "note: criterion 5 ran its bulk round-trip at word lengths 1..8 with single\n"
                "      spot words at lengths 9 and 10.  One exact length-12 composite costs\n"
                "      10-200 s, so the full length <= 12 envelope (plus spot words at 11\n"
                "      and 12) only runs when CHARCUBIC_ACCEPTANCE_FULL=1 is set.")
