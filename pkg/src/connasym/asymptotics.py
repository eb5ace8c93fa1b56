"""Bender's transfer formula, the truncated expansions, and exact error reports."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import DomainError, HypothesisViolation, UsageError
from .sequences import (
    GRAPH,
    TOURNAMENT,
    connected_counts,
    exact_rho,
    graph_series,
    irreducible_counts,
    rho_graph_series,
    rho_polynomials,
    tournament_series,
    tournament_expansion_coefficients,
)
from .series import TruncatedSeries

GRAPH_KIND = "graph"
TOURNAMENT_KIND = "tournament"
GRAPH_P_KIND = "graph-p"
REPORT_KINDS = (GRAPH_KIND, TOURNAMENT_KIND, GRAPH_P_KIND)


def _table_order(n: int) -> int:
    # Round up so that nearby sizes share one cached table.
    order = 64
    while order < n:
        order *= 2
    return order


# -- Bender engine ------------------------------------------------------------


@dataclass(frozen=True)
class BenderInput:
    """Coefficients ``a_0..a_M`` of ``A(z)`` and ``d_0..d_{r-1}`` of ``D(z)``.

    ``a_0`` is carried for indexing convenience and must be 0, since ``A`` has
    no constant term.  Every other supplied ``a_n`` must be non-zero.
    """

    a: tuple
    d: tuple
    r: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "d", tuple(Fraction(x) for x in self.d))
        if self.r < 1:
            raise UsageError(f"truncation order r must be >= 1, got {self.r}")
        if len(self.d) < self.r:
            raise UsageError(f"need d_0..d_{self.r - 1}, got {len(self.d)} coefficients")
        if self.a and self.a[0] != 0:
            raise UsageError("A(z) must have zero constant term")
        for n, x in enumerate(self.a[1:], start=1):
            if x == 0:
                raise HypothesisViolation(f"a_{n} = 0; the transfer needs a_n != 0 for all n")

    @property
    def max_n(self) -> int:
        return len(self.a) - 1


def bender_expand(inp: BenderInput, n: int) -> Fraction:
    """``sum_{k=0}^{r-1} d_k a_{n-k}``, the truncated estimate of ``b_n``."""
    if n <= inp.r:
        raise UsageError(f"need n > r (n={n}, r={inp.r})")
    if n > inp.max_n:
        raise UsageError(f"a-stream holds a_1..a_{inp.max_n}, need a_{n}")
    total = Fraction(0)
    for k in range(inp.r):
        ank = inp.a[n - k]
        if ank == 0:
            raise HypothesisViolation(f"a_{n - k} = 0")
        total += inp.d[k] * ank
    return total


def _a_stream(series: TruncatedSeries) -> tuple:
    return (Fraction(0),) + tuple(series.coeffs[1:])


def connected_bender_input(max_n: int, r: int) -> BenderInput:
    """``A = G - 1`` and ``F(z, w) = ln(1 + w)``, so ``D = 1/G = 1 - I``."""
    a = _a_stream(graph_series(max_n))
    d = graph_series(r - 1).recip().coeffs
    return BenderInput(a, d, r)


def irreducible_bender_input(max_n: int, r: int) -> BenderInput:
    """``A = T - 1`` and ``F(z, w) = -1/(1 + w)``, so ``D = 1/T^2 = (1 - I)^2``."""
    a = _a_stream(tournament_series(max_n))
    inv = tournament_series(r - 1).recip()
    return BenderInput(a, (inv * inv).coeffs, r)


def connected_p_bender_input(max_n: int, r: int, p) -> BenderInput:
    """The G(n, p) analogue of :func:`connected_bender_input` at ``rho = 1/(1-p)``."""
    rho = exact_rho(p)
    a = _a_stream(rho_graph_series(max_n).evaluate_rho(rho))
    d = rho_graph_series(r - 1).recip().evaluate_rho(rho).coeffs
    return BenderInput(a, d, r)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    ratio1: Fraction
    ratio2: Fraction


def bender_condition_probe(a: Sequence, r: int, n_range: Iterable[int]) -> list[ProbeRow]:
    """Exact finite-n values of the two ratios in the transfer hypotheses.

    ``ratio1(n) = a_{n-1}/a_n`` and
    ``ratio2(n) = sum_{k=r}^{n-r} |a_k a_{n-k}| / |a_{n-r}|``.
    Both are only evidence: the hypotheses are limits and cannot be decided
    from finitely many terms.
    """
    ns = list(n_range)
    if r < 1:
        raise UsageError(f"r must be >= 1, got {r}")
    if len(ns) < 2 * r + 1:
        raise UsageError(f"n_range must hold at least 2r+1 = {2 * r + 1} sizes")
    if min(ns) < max(2, r + 1):
        raise UsageError(f"n_range must start at n >= {max(2, r + 1)}")
    if max(ns) >= len(a):
        raise UsageError(f"coefficient stream too short for n = {max(ns)}")
    rows = []
    for n in ns:
        if a[n] == 0 or a[n - r] == 0:
            raise HypothesisViolation(f"zero coefficient near n = {n}")
        ratio1 = Fraction(a[n - 1]) / Fraction(a[n])
        s = sum((abs(Fraction(a[k]) * a[n - k]) for k in range(r, n - r + 1)), Fraction(0))
        rows.append(ProbeRow(n, ratio1, s / abs(Fraction(a[n - r]))))
    return rows


# -- exact probabilities --------------------------------------------------------


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError(f"size n must be >= 1, got {n}")


def exact_prob_connected(n: int) -> Fraction:
    """``p_n = c_n / 2^{C(n,2)}``."""
    _check_n(n)
    return Fraction(connected_counts(_table_order(n))[n], 2 ** comb(n, 2))


def exact_prob_irreducible(n: int) -> Fraction:
    """``q_n = i_n / 2^{C(n,2)}``."""
    _check_n(n)
    return Fraction(irreducible_counts(_table_order(n))[n], 2 ** comb(n, 2))


def exact_prob_connected_p(n: int, p) -> Fraction:
    """Connectivity probability of G(n, p), exactly, for rational ``p``.

    Uses ``log sum_m rho^{C(m,2)} z^m/m!`` with ``rho = 1 + p/(1-p)``, whose n-th
    count is the edge-weighted number of connected graphs.
    """
    _check_n(n)
    p = Fraction(p)
    rho = exact_rho(p)
    s = TruncatedSeries([rho ** comb(m, 2) / factorial(m) for m in range(n + 1)])
    weighted = s.log()[n] * factorial(n)
    return weighted * (1 - p) ** comb(n, 2)


# -- truncated expansions ------------------------------------------------------


def _check_nr(n: int, r: int) -> None:
    _check_n(n)
    if r < 1:
        raise UsageError(f"truncation order r must be >= 1, got {r}")


def _expansion(n: int, r: int, coeffs: Sequence, base: Fraction) -> Fraction:
    # 1 - sum_{k<r} coeff_k C(n,k) base^{k(k+1)/2 - nk}
    total = Fraction(1)
    for k in range(1, r):
        if coeffs[k]:
            total -= coeffs[k] * comb(n, k) * Fraction(base) ** (k * (k + 1) // 2 - n * k)
    return total


def expansion_prob_connected(n: int, r: int) -> Fraction:
    """``1 - sum_{k=1}^{r-1} i_k C(n,k) 2^{k(k+1)/2} / 2^{nk}``."""
    _check_nr(n, r)
    i = irreducible_counts(max(r - 1, 0)).counts
    return _expansion(n, r, i, Fraction(2))


def expansion_prob_irreducible(n: int, r: int) -> Fraction:
    """Same shape as the graph case with coefficients ``2 i_k - i_k^(2)``."""
    _check_nr(n, r)
    return _expansion(n, r, tournament_expansion_coefficients(max(r - 1, 0)), Fraction(2))


def expansion_prob_connected_p(n: int, r: int, p) -> Fraction:
    """``1 - sum_{k<r} P_k(rho) C(n,k) rho^{k(k+1)/2 - nk}`` at ``rho = 1/(1-p)``."""
    _check_nr(n, r)
    rho = exact_rho(p)
    coeffs = [0]
    if r > 1:
        coeffs += [poly(rho) for _, poly in rho_polynomials(r - 1)]
    return _expansion(n, r, coeffs, rho)


# -- error reports -------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionReport:
    kind: str
    n: int
    r: int
    exact: Fraction
    approx: Fraction
    abs_error: Fraction
    scaled_error: Fraction
    base: Fraction = Fraction(2)

    @classmethod
    def build(cls, kind: str, n: int, r: int, exact: Fraction, approx: Fraction,
              base: Fraction = Fraction(2)) -> ExpansionReport:
        err = abs(exact - approx)
        return cls(kind, n, r, exact, approx, err, scaled_error(err, n, r, base), Fraction(base))

    def verify(self) -> bool:
        """Recompute both error fields from ``exact`` and ``approx``."""
        err = abs(self.exact - self.approx)
        return err == self.abs_error and scaled_error(err, self.n, self.r, self.base) == self.scaled_error


def scaled_error(abs_error: Fraction, n: int, r: int, base=Fraction(2)) -> Fraction:
    """``abs_error / (n^r / base^{nr})``."""
    if n <= 0:
        raise UsageError("scaled error needs n > 0")
    return abs_error * Fraction(base) ** (n * r) / n ** r


def error_report(kind: str, r: int, n_range: Iterable[int], p=None) -> list[ExpansionReport]:
    """One :class:`ExpansionReport` per n, entirely in exact arithmetic."""
    if kind == GRAPH_KIND:
        exact, approx, base = exact_prob_connected, lambda n: expansion_prob_connected(n, r), 2
    elif kind == TOURNAMENT_KIND:
        exact, approx, base = exact_prob_irreducible, lambda n: expansion_prob_irreducible(n, r), 2
    elif kind == GRAPH_P_KIND:
        if p is None:
            raise UsageError("kind 'graph-p' needs an edge probability p")
        p = Fraction(p)
        base = exact_rho(p)
        exact = lambda n: exact_prob_connected_p(n, p)  # noqa: E731
        approx = lambda n: expansion_prob_connected_p(n, r, p)  # noqa: E731
    else:
        raise UsageError(f"unknown kind {kind!r}; expected one of {REPORT_KINDS}")
    return [ExpansionReport.build(kind, n, r, exact(n), approx(n), Fraction(base)) for n in n_range]


__all__ = [
    "BenderInput",
    "ExpansionReport",
    "ProbeRow",
    "bender_condition_probe",
    "bender_expand",
    "connected_bender_input",
    "connected_p_bender_input",
    "error_report",
    "exact_prob_connected",
    "exact_prob_connected_p",
    "exact_prob_irreducible",
    "expansion_prob_connected",
    "expansion_prob_connected_p",
    "expansion_prob_irreducible",
    "irreducible_bender_input",
    "scaled_error",
    "GRAPH",
    "TOURNAMENT",
]
