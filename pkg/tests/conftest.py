from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from connasym.series import TruncatedSeries

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_strategy(order: int, constant=None):
    """Random ordinary series of the given order; optionally pin the constant term."""
    tail = st.lists(small_fractions, min_size=order, max_size=order)
    head = st.just(Fraction(constant)) if constant is not None else small_fractions
    return st.builds(lambda c, cs: TruncatedSeries([c] + cs), head, tail)


CRITERIA = {
    "c1": "oracle equivalence, n = 1..6",
    "c2": "i_1..i_4 and four-term expansion coefficients",
    "c3": "leading-order identities",
    "c4": "rho-polynomials and P_k(2) = i_k, k <= 8",
    "c5": "big-oh surrogate up to n = 60, r <= 5",
    "c6": "Bender engine equivalence, n <= 40, r <= 5",
    "c7": "tournament decomposition on every instance n <= 5",
    "c8": "Monte Carlo within 3 standard errors, reproducible",
    "c9": "exact round trips up to order 30",
}
_ACCEPTANCE: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1]
        key = name.split("_")[1]
        _ACCEPTANCE.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key, label in CRITERIA.items():
        outcomes = _ACCEPTANCE.get(key)
        if outcomes is None:
            status = "SKIP"
        else:
            status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {key}  {label}")
