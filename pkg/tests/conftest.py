import pytest

# filled in by test_acceptance; one (label, passed, detail) per criterion
ACCEPTANCE = []


def record(label, passed, detail):
    line = f"{'PASS' if passed else 'FAIL'} {label}: {detail}"
    print(line)
    ACCEPTANCE.append(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    return record
