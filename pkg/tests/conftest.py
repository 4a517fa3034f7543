import pytest

from septica.precision import agree_digits, make_context


@pytest.fixture(scope="session")
def ctx():
    return make_context(60)


@pytest.fixture(scope="session")
def ctx30():
    return make_context(30)


def assert_agree(a, b, ctx, need):
    got = agree_digits(a, b, ctx)
    assert got >= need, f"agree to {got} digits, need {need}: {a} vs {b}"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", ()))
            if report.when == "call" and "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props["title"]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, status, title in sorted(lines):
            terminalreporter.write_line(f"{status} criterion {number}: {title}")
