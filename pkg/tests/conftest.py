from __future__ import annotations

import pytest

from spminors.laurent import LaurentPoly, poly_sum

_CRITERIA: list[tuple[int, bool, str]] = []


def Y(s: int, l: int, e: int = 1) -> LaurentPoly:
    return LaurentPoly.var(s, l, e)


def mono(*factors: tuple[int, int, int], coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial({(s, l): e for s, l, e in factors}, coeff)


# r=3, m=3, last=2, k=5: the eleven monomials, coefficient 2 on Y12/Y22
EXAMPLE_MINOR = poly_sum([
    mono((3, 2, -1)),
    mono((2, 2, 1), (3, 1, -1), (2, 3, -1)),
    mono((1, 3, 1), (3, 1, -1), (2, 2, -1)),
    mono((1, 2, 1), (3, 1, -1), (2, 1, -1)),
    mono((1, 1, 1), (3, 1, -1)),
    mono((2, 1, 1), (2, 3, -1)),
    mono((2, 1, 1), (1, 3, 1), (2, 2, -2)),
    mono((1, 2, 1), (2, 2, -1), coeff=2),
    mono((2, 1, 1), (1, 1, 1), (2, 2, -1)),
    mono((1, 2, 2), (2, 1, -1), (1, 3, -1)),
    mono((1, 1, 1), (1, 2, 1), (1, 3, -1)),
])

# labels Q(p_1), ..., Q(p_12) of X_2(3, 2) for r=3, in enumeration order
EXAMPLE_PATH_LABELS = [
    mono((3, 2, -1)),
    mono((2, 2, 1), (3, 1, -1), (2, 3, -1)),
    mono((1, 3, 1), (3, 1, -1), (2, 2, -1)),
    mono((1, 2, 1), (3, 1, -1), (2, 1, -1)),
    mono((1, 1, 1), (3, 1, -1)),
    mono((2, 1, 1), (2, 3, -1)),
    mono((2, 1, 1), (1, 3, 1), (2, 2, -2)),
    mono((1, 2, 1), (2, 2, -1)),
    mono((2, 1, 1), (1, 1, 1), (2, 2, -1)),
    mono((1, 2, 1), (2, 2, -1)),
    mono((1, 2, 2), (2, 1, -1), (1, 3, -1)),
    mono((1, 1, 1), (1, 2, 1), (1, 3, -1)),
]


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""
    records: list[tuple[int, str]] = []

    def record(number: int, description: str) -> None:
        records.append((number, description))

    record.records = records
    yield record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call" or "criterion" not in item.fixturenames:
        return
    rec = item.funcargs.get("criterion")
    for number, description in getattr(rec, "records", []):
        _CRITERIA.append((number, rep.passed, description))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, description in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {description}")
