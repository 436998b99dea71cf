import pytest

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, list[str]] = {}


def pytest_addoption(parser):
    parser.addoption(
        "--full-scale",
        action="store_true",
        default=False,
        help="run criterion 4 with 200 seeds at radius 10 (slow)",
    )


@pytest.fixture(scope="session")
def full_scale(request) -> bool:
    return request.config.getoption("--full-scale")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[n]
        verdict = "FAIL" if any(p.startswith("FAIL") for p in parts) else "PASS"
        detail = "; ".join(p.split(" ", 1)[1] for p in parts)
        terminalreporter.write_line(f"criterion {n}: {verdict}  {detail}")
