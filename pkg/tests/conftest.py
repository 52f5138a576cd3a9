import pytest

from stablemodels.program import parse_program

_ACCEPTANCE: list[tuple[str, bool | None, str]] = []


def named(program, models):
    return {frozenset(program.atoms[a] for a in m) for m in models}


def prog(text):
    return parse_program(text)


@pytest.fixture
def acceptance_report():
    # ok=None marks a criterion that is reported but deliberately not tested.
    def report(criterion: str, ok: bool | None, detail: str = ""):
        _ACCEPTANCE.append((criterion, ok, detail))
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in _ACCEPTANCE:
        status = "EXCLUDED" if ok is None else "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {criterion}  {detail}")
