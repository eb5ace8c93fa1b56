"""Counting sequences for labelled graphs and tournaments, and the rho-polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .errors import ConsistencyError, DomainError, UsageError
from .polynomial import RhoPolynomial
from .series import TruncatedSeries

GRAPH = "graph-connected"
TOURNAMENT = "tournament-irreducible"
KINDS = (GRAPH, TOURNAMENT)


@dataclass(frozen=True)
class CountTable:
    """Integer sequence ``counts[n - start]`` for ``n = start, start+1, ...``."""

    name: str
    counts: tuple
    start: int = 0
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def stop(self) -> int:
        """Largest index held."""
        return self.start + len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        if not self.start <= n <= self.stop:
            raise IndexError(f"{self.name}: index {n} outside {self.start}..{self.stop}")
        return self.counts[n - self.start]

    def __len__(self):
        return len(self.counts)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    @property
    def entries(self) -> list[tuple[int, int]]:
        return [(self.start + j, c) for j, c in enumerate(self.counts)]

    def restrict(self, start: int) -> CountTable:
        return CountTable(self.name, self.counts[start - self.start:], start, self.provenance)


@dataclass(frozen=True)
class PolynomialTable:
    """The polynomials ``P_k(rho)`` for ``k = 1..K``."""

    entries: tuple = field(default_factory=tuple)

    def __getitem__(self, k: int) -> RhoPolynomial:
        for j, poly in self.entries:
            if j == k:
                return poly
        raise IndexError(k)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _check_order(N: int) -> None:
    if N < 0:
        raise UsageError(f"order must be non-negative, got {N}")


# -- series -----------------------------------------------------------------


@lru_cache(maxsize=None)
def graph_series(N: int) -> TruncatedSeries:
    """``G(z) = sum 2^{C(n,2)} z^n / n!`` up to order N."""
    _check_order(N)
    return TruncatedSeries([Fraction(2 ** comb(n, 2), factorial(n)) for n in range(N + 1)])


@lru_cache(maxsize=None)
def tournament_series(N: int) -> TruncatedSeries:
    # Same numbers as graph_series, built separately on purpose: the two
    # classes agree in count only.
    _check_order(N)
    return TruncatedSeries([Fraction(1 << (n * (n - 1) // 2), factorial(n)) for n in range(N + 1)])


@lru_cache(maxsize=None)
def connected_series(N: int) -> TruncatedSeries:
    """``C(z) = log G(z)``."""
    return graph_series(N).log()


@lru_cache(maxsize=None)
def irreducible_series(N: int) -> TruncatedSeries:
    """``I(z) = 1 - 1/T(z)``."""
    return 1 - tournament_series(N).recip()


# -- tables -----------------------------------------------------------------


def graph_counts(N: int) -> CountTable:
    _check_order(N)
    return CountTable("g", [2 ** comb(n, 2) for n in range(N + 1)], provenance="2^C(n,2)")


def tournament_counts(N: int) -> CountTable:
    _check_order(N)
    return CountTable("t", [2 ** comb(n, 2) for n in range(N + 1)], provenance="2^C(n,2)")


@lru_cache(maxsize=None)
def connected_counts(N: int) -> CountTable:
    """Connected labelled graphs: ``c_n = n! [z^n] log G(z)``, with ``c_0 = 0``."""
    return CountTable("c", connected_series(N).counts(), provenance="log G")


@lru_cache(maxsize=None)
def irreducible_counts(N: int) -> CountTable:
    """Irreducible labelled tournaments: ``i_n = n! [z^n] (1 - 1/T(z))``."""
    return CountTable("i", irreducible_series(N).counts(), provenance="1 - 1/T")


@lru_cache(maxsize=None)
def components_counts(kind: str, m: int, N: int) -> CountTable:
    """Objects of size n with exactly ``m`` components.

    Tournaments decompose into an *ordered* sequence of irreducible blocks, so
    the generating function is ``I^m``.  Graphs decompose into an unordered set
    of connected components, giving ``C^m / m!``.
    """
    if m < 0:
        raise UsageError(f"component count must be non-negative, got {m}")
    if kind == TOURNAMENT:
        s = irreducible_series(N) ** m
        name = f"i^({m})"
    elif kind == GRAPH:
        s = (connected_series(N) ** m) * Fraction(1, factorial(m))
        name = f"c^({m})"
    else:
        raise UsageError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return CountTable(name, s.counts(), provenance=f"{kind} m={m}")


def tournament_expansion_coefficients(K: int) -> list[int]:
    """``2 i_k - i_k^(2)`` for ``k = 0..K`` (index 0 is 0)."""
    i = irreducible_counts(K)
    i2 = components_counts(TOURNAMENT, 2, K)
    return [2 * i[k] - i2[k] if k else 0 for k in range(K + 1)]


# -- rho generalisation -----------------------------------------------------


@lru_cache(maxsize=None)
def rho_graph_series(N: int) -> TruncatedSeries:
    """``sum rho^{C(n,2)} z^n / n!`` as a labelled series over Z[rho].

    Entry n stores the polynomial ``rho^{C(n,2)}``; the true coefficient is that
    polynomial divided by ``n!``.
    """
    _check_order(N)
    return TruncatedSeries(
        [RhoPolynomial.monomial(comb(n, 2)) for n in range(N + 1)], labelled=True
    )


@lru_cache(maxsize=None)
def rho_polynomials(K: int) -> PolynomialTable:
    """``P_k = -k! [z^k] 1/G_rho(z)`` for ``k = 1..K``."""
    if K < 1:
        raise UsageError(f"K must be at least 1, got {K}")
    inv = rho_graph_series(K).recip()
    if inv[0] != 1:
        raise ConsistencyError(f"1/G_rho has constant term {inv[0]}")
    entries = []
    for k in range(1, K + 1):
        poly = -inv[k]
        if not all(isinstance(c, int) for c in poly.coeffs):
            raise ConsistencyError(f"P_{k} has non-integer coefficients")
        entries.append((k, poly))
    return PolynomialTable(tuple(entries))


def exact_rho(p: Fraction) -> Fraction:
    """``rho = 1/(1-p)`` for a rational edge probability ``0 < p < 1``."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise DomainError(f"edge probability must lie in (0, 1), got {p}")
    return 1 / (1 - p)
