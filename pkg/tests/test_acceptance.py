"""Exit criteria for the package.

Run alone with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import random
import time
from fractions import Fraction as F
from math import comb, factorial

import pytest

from connasym.asymptotics import (
    bender_expand,
    connected_bender_input,
    error_report,
    exact_prob_connected,
    exact_prob_connected_p,
    expansion_prob_connected,
    expansion_prob_irreducible,
    irreducible_bender_input,
)
from connasym.oracle import (
    TournamentInstance,
    component_histogram_exhaustive,
    count_connected_exhaustive,
    count_irreducible_exhaustive,
    decompose_tournament,
    mc_estimate,
)
from connasym.polynomial import RhoPolynomial
from connasym.sequences import (
    GRAPH,
    TOURNAMENT,
    components_counts,
    connected_counts,
    connected_series,
    graph_series,
    irreducible_counts,
    irreducible_series,
    rho_graph_series,
    rho_polynomials,
    tournament_series,
)
from connasym.series import TruncatedSeries

FIGURE_ARCS = (
    [(4, v) for v in (1, 2, 3, 5, 6)]
    + [(5, v) for v in (1, 2, 3, 6)]
    + [(1, 2), (2, 6), (6, 1)]
    + [(1, 3), (2, 3), (6, 3)]
)


def _term(expansion, n, k):
    """The k-th summand as it enters the expansion (with its sign)."""
    return expansion(n, k + 1) - expansion(n, k)


def test_c1_oracle_equivalence():
    start = time.perf_counter()
    c, i = connected_counts(6), irreducible_counts(6)
    for n in range(1, 7):
        assert count_connected_exhaustive(n) == c[n]
        assert count_irreducible_exhaustive(n) == i[n]
        for kind, skind in (("graph", GRAPH), ("tournament", TOURNAMENT)):
            hist = component_histogram_exhaustive(kind, n)
            assert sum(hist.values()) == 2 ** comb(n, 2)
            for m in range(0, n + 1):
                assert hist.get(m, 0) == components_counts(skind, m, n)[n]
    assert time.perf_counter() - start < 30


def test_c2_known_values():
    assert list(irreducible_counts(4).counts[1:]) == [1, 0, 2, 24]
    for n in range(5, 41):
        assert _term(expansion_prob_connected, n, 1) == -F(comb(n, 1), 2 ** (n - 1))
        assert _term(expansion_prob_connected, n, 2) == 0
        assert _term(expansion_prob_connected, n, 3) == -2 * F(comb(n, 3), 2 ** (3 * n - 6))
        assert _term(expansion_prob_connected, n, 4) == -24 * F(comb(n, 4), 2 ** (4 * n - 10))
        two = F(2)
        assert _term(expansion_prob_irreducible, n, 1) == -comb(n, 1) * two ** (2 - n)
        assert _term(expansion_prob_irreducible, n, 2) == comb(n, 2) * two ** (4 - 2 * n)
        assert _term(expansion_prob_irreducible, n, 3) == -comb(n, 3) * two ** (8 - 3 * n)
        assert _term(expansion_prob_irreducible, n, 4) == -comb(n, 4) * two ** (15 - 4 * n)


SPOT_N = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]


@pytest.mark.parametrize("n", SPOT_N)
def test_c3_leading_orders(n):
    assert expansion_prob_connected(n, 2) == 1 - F(2 * n, 2 ** n)
    assert expansion_prob_irreducible(n, 2) == 1 - n * F(2) ** (2 - n)


def test_c4_rho_polynomials():
    known = ["1", "rho-2", "rho^3-6rho+6", "rho^6-8rho^3-6rho^2+36rho-24"]
    assert [p for _, p in rho_polynomials(4)] == [RhoPolynomial.parse(s) for s in known]
    # route 1: recip over Z[rho], then specialise at rho = 2
    via_rho = {k: poly(2) for k, poly in rho_polynomials(8)}
    # route 2: recip of T over the rationals
    inv_t = tournament_series(8).recip()
    via_t = {k: -inv_t[k] * factorial(k) for k in range(1, 9)}
    # route 3: specialise G_rho first, then invert
    inv_g2 = rho_graph_series(8).evaluate_rho(2).recip()
    via_g2 = {k: -inv_g2[k] * factorial(k) for k in range(1, 9)}
    assert via_rho == via_t == via_g2
    assert [via_rho[k] for k in range(1, 9)] == list(irreducible_counts(8).counts[1:])


@pytest.mark.parametrize("kind", ["graph", "tournament"])
@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_c5_big_oh_surrogate(kind, r):
    reports = error_report(kind, r, range(2 * r + 4, 61))
    reference = reports[0].scaled_error
    for rep in reports:
        assert rep.verify()
        assert rep.scaled_error <= 4 * reference, (rep.n, float(rep.scaled_error / reference))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_c6_bender_engine_equivalence(r):
    g_in, t_in = connected_bender_input(40, r), irreducible_bender_input(40, r)
    for n in range(r + 1, 41):
        scale = F(factorial(n), 2 ** comb(n, 2))
        assert bender_expand(g_in, n) * scale == expansion_prob_connected(n, r)
        assert bender_expand(t_in, n) * scale == expansion_prob_irreducible(n, r)


def test_c7_lemma_instances():
    checked = 0
    for n in range(1, 6):
        for mask in range(1 << comb(n, 2)):
            t = TournamentInstance(n, mask)
            decompose_tournament(t).check(t)
            checked += 1
    assert checked == 1 + 2 + 8 + 64 + 1024
    fig = TournamentInstance.from_arcs(6, FIGURE_ARCS)
    assert decompose_tournament(fig).as_lists() == [[4], [5], [1, 2, 6], [3]]


@pytest.mark.parametrize("n,p,seed", [(12, F(1, 2), 20241016), (10, F(1, 3), 7)])
def test_c8_monte_carlo(n, p, seed):
    start = time.perf_counter()
    res = mc_estimate("graph", n, p, 10 ** 6, seed)
    again = mc_estimate("graph", n, p, 10 ** 6, seed)
    assert res == again
    exact = exact_prob_connected(n) if p == F(1, 2) else exact_prob_connected_p(n, p)
    assert abs(res.estimate - float(exact)) <= 3 * res.stderr
    assert time.perf_counter() - start < 60


def test_c9_round_trips():
    rng = random.Random(9)
    for N in range(0, 31):
        G, T = graph_series(N), tournament_series(N)
        C, I = connected_series(N), irreducible_series(N)
        assert G.log().exp() == G
        assert G.recip().recip() == G
        assert T * (1 - I) == TruncatedSeries.one(N)
        assert C.exp() == G
        a = TruncatedSeries([1] + [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(N)])
        assert a.log().exp() == a
        assert a.recip().recip() == a
        b = a - 1
        assert b.exp().log() == b


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-v"]))
