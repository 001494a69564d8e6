import pytest

from rankhull.gf import build_field, standard_tower


@pytest.fixture(scope="session")
def f16():
    return build_field(2, 1, 2, None, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 1, 1, None, [1, 0, 1])


@pytest.fixture(scope="session")
def f4():
    return build_field(2, 1, 1, None, [1, 1, 1])


@pytest.fixture(scope="session")
def f16_over_f4():
    return standard_tower(4, 1)


# one line per acceptance criterion in the terminal summary
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.keywords:
        if mark.startswith("test_criterion_"):
            num = int(mark.split("_")[2])
            ACCEPTANCE_RESULTS[num] = ("PASS" if report.passed else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        status, nodeid = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  ({nodeid.split('::')[-1]})")
