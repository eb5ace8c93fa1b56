from fractions import Fraction as F
from math import comb, factorial

import pytest

from connasym.asymptotics import (
    BenderInput,
    ExpansionReport,
    bender_condition_probe,
    bender_expand,
    connected_bender_input,
    connected_p_bender_input,
    error_report,
    exact_prob_connected,
    exact_prob_connected_p,
    exact_prob_irreducible,
    expansion_prob_connected,
    expansion_prob_connected_p,
    expansion_prob_irreducible,
    irreducible_bender_input,
)
from connasym.errors import DomainError, HypothesisViolation, UsageError


def a_graph(n):
    return F(2 ** comb(n, 2), factorial(n))


# -- Bender engine -------------------------------------------------------------


def test_bender_identity_functional():
    a = [0] + [a_graph(n) for n in range(1, 12)]
    inp = BenderInput(a, [1, 0, 0], 3)
    assert bender_expand(inp, 9) == a_graph(9)


def test_bender_graph_r2_n10():
    inp = connected_bender_input(10, 2)
    # i_1 = 1, so d_1 = -1
    assert bender_expand(inp, 10) == a_graph(10) - a_graph(9)


def test_bender_tournament_r1_n5():
    inp = irreducible_bender_input(5, 1)
    assert inp.d[0] == 1
    assert bender_expand(inp, 5) == F(2 ** 10, 120)


def test_bender_errors():
    with pytest.raises(HypothesisViolation):
        BenderInput([0, 1, 0, 3], [1], 1)
    with pytest.raises(UsageError):
        BenderInput([0, 1, 2], [1], 2)
    inp = connected_bender_input(6, 2)
    with pytest.raises(UsageError):
        bender_expand(inp, 7)
    with pytest.raises(UsageError):
        bender_expand(inp, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_bender_reproduces_graph_p_expansion(r):
    p = F(1, 3)
    inp = connected_p_bender_input(25, r, p)
    rho = 1 / (1 - p)
    for n in range(r + 1, 26):
        scale = F(factorial(n)) / rho ** comb(n, 2)
        assert bender_expand(inp, n) * scale == expansion_prob_connected_p(n, r, p)


# -- condition probe -----------------------------------------------------------------


def test_probe_ratio1_closed_form():
    a = connected_bender_input(30, 1).a
    rows = bender_condition_probe(a, 1, range(5, 31))
    for row in rows:
        assert row.ratio1 == F(row.n, 2 ** (row.n - 1))
    assert rows[0].ratio1 == F(5, 16)


def test_probe_ratio2_nonincreasing_for_r1():
    a = connected_bender_input(40, 1).a
    rows = bender_condition_probe(a, 1, range(10, 41))
    for prev, cur in zip(rows, rows[1:]):
        assert cur.ratio2 <= prev.ratio2


def test_probe_range_too_short():
    a = connected_bender_input(40, 2).a
    with pytest.raises(UsageError):
        bender_condition_probe(a, 2, range(10, 14))


# -- exact probabilities ------------------------------------------------------------


def test_exact_probabilities():
    assert exact_prob_connected(1) == 1
    assert exact_prob_connected(4) == F(19, 32)
    assert exact_prob_irreducible(3) == F(1, 4)


def test_exact_prob_connected_p_examples():
    p = F(1, 3)
    assert exact_prob_connected_p(3, p) == 3 * p ** 2 * (1 - p) + p ** 3 == F(7, 27)
    for q in (F(1, 5), F(2, 7), F(9, 10)):
        assert exact_prob_connected_p(2, q) == q


def test_exact_prob_connected_p_half_matches_uniform():
    for n in range(1, 31):
        assert exact_prob_connected_p(n, F(1, 2)) == exact_prob_connected(n)


def test_exact_prob_connected_p_domain():
    for bad in (F(0), F(1), F(3, 2)):
        with pytest.raises(DomainError):
            exact_prob_connected_p(4, bad)


# -- expansions ------------------------------------------------------------------------


def test_expansion_graph_examples():
    assert expansion_prob_connected(10, 1) == 1
    assert expansion_prob_connected(10, 2) == F(251, 256)


def test_expansion_graph_four_terms():
    for n in range(5, 30):
        four_terms = (1 - F(comb(n, 1), 2 ** (n - 1)) - 2 * F(comb(n, 3), 2 ** (3 * n - 6))
                  - 24 * F(comb(n, 4), 2 ** (4 * n - 10)))
        assert expansion_prob_connected(n, 5) == four_terms


def test_expansion_tournament_examples():
    assert expansion_prob_irreducible(10, 2) == 1 - F(40, 1024)
    n = 12
    k2 = expansion_prob_irreducible(n, 3) - expansion_prob_irreducible(n, 2)
    assert k2 == comb(n, 2) * F(2) ** (4 - 2 * n) > 0
    k4 = expansion_prob_irreducible(n, 5) - expansion_prob_irreducible(n, 4)
    assert k4 == -comb(n, 4) * F(2) ** (15 - 4 * n)


def test_expansion_p_examples():
    for n in (6, 10, 15):
        for r in (1, 2, 3, 5):
            assert expansion_prob_connected_p(n, r, F(1, 2)) == expansion_prob_connected(n, r)
    rho = F(3, 2)
    assert expansion_prob_connected_p(9, 2, F(1, 3)) == 1 - 9 * rho ** (1 - 9)
    expected = 1 - 8 * rho ** -7 - (rho - 2) * 28 * rho ** (3 - 16)
    assert expansion_prob_connected_p(8, 3, F(1, 3)) == expected


def test_negative_p2_term_moves_toward_exact():
    # P_2(3/2) < 0: the k=2 term raises the estimate, and so it must bring it closer.
    p = F(1, 3)
    for n in range(12, 30):
        exact = exact_prob_connected_p(n, p)
        e2 = expansion_prob_connected_p(n, 2, p)
        e3 = expansion_prob_connected_p(n, 3, p)
        assert e3 > e2
        assert abs(exact - e3) < abs(exact - e2)


# -- error reports ----------------------------------------------------------------------


def test_report_graph_r1_n4():
    (rep,) = error_report("graph", 1, [4])
    assert rep.abs_error == F(13, 32)
    assert rep.verify()


def test_report_graph_r2_bounded():
    reps = error_report("graph", 2, range(10, 61))
    bound = 4 * reps[0].scaled_error
    assert all(r.scaled_error <= bound for r in reps)


def test_report_tournament_r5_bounded():
    reps = error_report("tournament", 5, range(20, 61))
    bound = 4 * reps[0].scaled_error
    assert all(r.scaled_error <= bound for r in reps)


def test_report_small_n_may_leave_unit_interval():
    (rep,) = error_report("tournament", 2, [3])
    assert (rep.exact, rep.approx, rep.abs_error) == (F(1, 4), F(-1, 2), F(3, 4))


def test_report_graph_p():
    reps = error_report("graph-p", 3, range(12, 20), p=F(1, 3))
    assert all(r.verify() and r.base == F(3, 2) for r in reps)
    with pytest.raises(UsageError):
        error_report("graph-p", 3, [5])
    with pytest.raises(UsageError):
        error_report("hypergraph", 3, [5])


def test_report_matches_serial_when_split():
    whole = error_report("tournament", 3, range(10, 30))
    parts = error_report("tournament", 3, range(10, 20)) + error_report("tournament", 3, range(20, 30))
    assert whole == parts


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_higher_order_never_worse(r):
    # i_2 = 0 makes orders 2 and 3 coincide; every other step strictly improves.
    for n in range(12, 41):
        exact = exact_prob_connected(n)
        lo = abs(exact - expansion_prob_connected(n, r))
        hi = abs(exact - expansion_prob_connected(n, r + 1))
        if r == 2:
            assert hi == lo
        else:
            assert hi < lo


def test_expansion_report_scaled_error():
    rep = ExpansionReport.build("graph", 10, 2, F(1), F(1, 2))
    assert rep.scaled_error == F(1, 2) * 2 ** 20 / 100
