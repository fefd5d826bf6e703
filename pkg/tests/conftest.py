import pytest

from monoprop.algebra import MonounaryAlgebra, worked_example

# criterion number -> (title, [(case id, passed, seconds)])
_acceptance: dict[int, tuple[str, list[tuple[str, bool, float]]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    n, title = marker.args
    case = item.callspec.id if hasattr(item, "callspec") else ""
    _acceptance.setdefault(n, (title, []))[1].append((case, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, cases = _acceptance[n]
        ok = all(passed for _, passed, _ in cases)
        secs = sum(s for _, _, s in cases)
        failed = [c for c, passed, _ in cases if not passed]
        extra = f"  failing: {', '.join(failed)}" if failed and any(failed) else ""
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {title} ({secs:.2f}s){extra}"
        )


@pytest.fixture
def ex() -> MonounaryAlgebra:
    """1 <-> 2, 3 -> 4 -> 4, with indices 0..3."""
    return worked_example()


@pytest.fixture
def fixpoint() -> MonounaryAlgebra:
    return MonounaryAlgebra((0,))
