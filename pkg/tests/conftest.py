import pytest

CRITERIA = {
    1: "S3 Nichols algebra dims [1,3,4,3,1], total 12, palindromic",
    2: "S3 relation space: dim ker S^2 = 6; quotient by the five quadratic relations equals the TOBA dims",
    3: "D_p kernel law dim ker S^2 = 2p-1 for p = 3, 5, 7",
    4: "Golod-Shafarevich: p=11 infinite, p=3 inconclusive with g3 = -3",
    5: "D4 quotient by eleven relations has total dimension 64",
    6: "S3 bosonization: dim 72, Hopf axioms, presentation relations, rank-12 fixture",
    7: "Braided lines N=2..5 and quantum linear space (2,3)",
    8: "Property suites (braid eq., Matsumoto, recursion, adjointness, radical, palindrome)",
}

_results: dict[int, list] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ok = report.outcome == "passed" and not hasattr(report, "wasxfail")
        _results.setdefault(marker, []).append((report.nodeid, ok, getattr(report, "wasxfail", "")))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        ok = all(r[1] for r in runs)
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {CRITERIA[n]}"
        notes = [r[2] for r in runs if r[2]]
        if notes:
            line += f" [{'; '.join(notes)}]"
        tr.write_line(line)
