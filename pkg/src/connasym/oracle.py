"""Brute-force ground truth: exhaustive enumeration and seeded Monte Carlo.

Instances on ``n`` vertices are integers whose bits index the vertex pairs
``(u, v)``, ``u < v``, in lexicographic order.  For graphs a set bit is an
edge; for tournaments a set bit means ``u -> v`` and a clear bit ``v -> u``.
Vertices are labelled ``1..n`` in every public structure.

This module must stay simple enough to be trusted, so it uses no generating
functions and no counting shortcuts.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .errors import ConsistencyError, DomainError, ResourceLimitError, UsageError

DEFAULT_LIMIT = 6
HARD_CAP = 7

#: Monte Carlo draws are made in chunks of this many trials.  Chunk ``j`` uses a
#: PCG64 generator seeded by the ``j``-th child of ``SeedSequence(seed)``, so any
#: assignment of chunks to workers reproduces the serial result bit for bit.
MC_CHUNK = 1 << 16


def pair_list(n: int) -> list[tuple[int, int]]:
    """0-based pairs ``(u, v)``, ``u < v``, in bit order."""
    return list(itertools.combinations(range(n), 2))


# -- instances ----------------------------------------------------------------


@dataclass(frozen=True)
class GraphInstance:
    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << comb(self.n, 2):
            raise UsageError(f"mask {self.mask} out of range for n={self.n}")

    def edges(self) -> list[tuple[int, int]]:
        return [(u + 1, v + 1) for b, (u, v) in enumerate(pair_list(self.n)) if self.mask >> b & 1]

    def components(self) -> int:
        return _graph_components(self.n, self.mask, pair_list(self.n))

    def is_connected(self) -> bool:
        return self.components() == 1


@dataclass(frozen=True)
class TournamentInstance:
    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << comb(self.n, 2):
            raise UsageError(f"mask {self.mask} out of range for n={self.n}")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> TournamentInstance:
        """Build from 1-based arcs ``(u, v)`` meaning ``u -> v``; every pair exactly once."""
        index = {pair: b for b, pair in enumerate(pair_list(n))}
        seen = set()
        mask = 0
        for u, v in arcs:
            key = (min(u, v) - 1, max(u, v) - 1)
            if u == v or key not in index:
                raise UsageError(f"bad arc {u}->{v} for n={n}")
            if key in seen:
                raise UsageError(f"pair {key[0] + 1},{key[1] + 1} oriented twice")
            seen.add(key)
            if u < v:
                mask |= 1 << index[key]
        if len(seen) != comb(n, 2):
            raise UsageError(f"{comb(n, 2) - len(seen)} pairs left unoriented")
        return cls(n, mask)

    def out_masks(self) -> list[int]:
        return _out_masks(self.n, self.mask, pair_list(self.n))

    def beats(self, u: int, v: int) -> bool:
        """True when the arc between 1-based ``u`` and ``v`` points ``u -> v``."""
        return bool(self.out_masks()[u - 1] >> (v - 1) & 1)

    def reversed(self) -> TournamentInstance:
        return TournamentInstance(self.n, self.mask ^ ((1 << comb(self.n, 2)) - 1))

    def arcs(self) -> list[tuple[int, int]]:
        out = self.out_masks()
        return [(u + 1, v + 1) for u in range(self.n) for v in range(self.n) if out[u] >> v & 1]


def _out_masks(n: int, mask: int, pairs) -> list[int]:
    out = [0] * n
    for b, (u, v) in enumerate(pairs):
        if mask >> b & 1:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return out


# -- disjoint-set union ----------------------------------------------------------


class DisjointSet:
    """Union-find over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.sets = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.sets -= 1
        return True


def _graph_components(n: int, mask: int, pairs) -> int:
    dsu = DisjointSet(n)
    for b, (u, v) in enumerate(pairs):
        if mask >> b & 1:
            dsu.union(u, v)
    return dsu.sets


# -- strongly connected components ------------------------------------------------


def tarjan_scc(n: int, out: list[int]) -> list[list[int]]:
    """Tarjan's algorithm on bitmask adjacency; components come sink-first."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: list[list[int]] = []
    counter = itertools.count()

    def strongconnect(v: int) -> None:
        index[v] = low[v] = next(counter)
        stack.append(v)
        on_stack[v] = True
        succ = out[v]
        while succ:
            bit = succ & -succ
            w = bit.bit_length() - 1
            succ ^= bit
            if index[w] < 0:
                strongconnect(w)
                low[v] = min(low[v], low[w])
            elif on_stack[w]:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = []
            while True:
                w = stack.pop()
                on_stack[w] = False
                comp.append(w)
                if w == v:
                    break
            result.append(comp)

    for v in range(n):
        if index[v] < 0:
            strongconnect(v)
    return result


def _reach(start: int, adj: list[int], allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            nxt |= adj[bit.bit_length() - 1]
            f ^= bit
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strongly_connected(n: int, out: list[int], vertices: int | None = None) -> bool:
    """Forward and backward reachability inside the vertex set ``vertices`` (bitmask)."""
    if vertices is None:
        vertices = (1 << n) - 1
    if not vertices:
        return False
    inn = [0] * n
    for u in range(n):
        o = out[u]
        for v in range(n):
            if o >> v & 1:
                inn[v] |= 1 << u
    start = (vertices & -vertices).bit_length() - 1
    return _reach(start, out, vertices) == vertices and _reach(start, inn, vertices) == vertices


@dataclass(frozen=True)
class Decomposition:
    """Ordered blocks of 1-based vertices; arcs between blocks point forward."""

    blocks: tuple

    def __len__(self):
        return len(self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def check(self, t: TournamentInstance) -> None:
        """Raise :class:`ConsistencyError` unless every invariant holds for ``t``."""
        n = t.n
        seen: set[int] = set()
        for block in self.blocks:
            if not block or seen & block:
                raise ConsistencyError("blocks must be non-empty and disjoint")
            seen |= block
        if seen != set(range(1, n + 1)):
            raise ConsistencyError("blocks do not cover 1..n")
        out = t.out_masks()
        for block in self.blocks:
            bits = sum(1 << (v - 1) for v in block)
            if not is_strongly_connected(n, out, bits):
                raise ConsistencyError(f"block {sorted(block)} is not irreducible")
        for i, j in itertools.combinations(range(len(self.blocks)), 2):
            for u in self.blocks[i]:
                for v in self.blocks[j]:
                    if not out[u - 1] >> (v - 1) & 1:
                        raise ConsistencyError(f"arc {v}->{u} points backward")


def decompose_tournament(t: TournamentInstance) -> Decomposition:
    """Split ``t`` into its sequence of irreducible blocks.

    The blocks are the strongly connected components in topological order of
    the condensation, which is a total order for tournaments.
    """
    out = t.out_masks()
    comps = tarjan_scc(t.n, out)[::-1]
    position = {}
    for i, comp in enumerate(comps):
        for v in comp:
            position[v] = i
    for u in range(t.n):
        for v in range(t.n):
            if out[u] >> v & 1 and position[u] > position[v]:
                raise ConsistencyError(f"arc {u + 1}->{v + 1} points backward in the condensation")
    return Decomposition(tuple(frozenset(v + 1 for v in comp) for comp in comps))


# -- exhaustive counts ----------------------------------------------------------------


def _check_cap(n: int, limit: int, allow_n7: bool) -> None:
    if n < 0:
        raise UsageError(f"n must be non-negative, got {n}")
    cap = HARD_CAP if allow_n7 else min(limit, HARD_CAP)
    if n > cap:
        raise ResourceLimitError(
            f"exhaustive enumeration capped at n={cap}"
            + ("" if allow_n7 or n > HARD_CAP else " (pass allow_n7 for n=7)"),
            cap,
        )


def _histogram_chunk(kind: str, n: int, lo: int, hi: int) -> Counter:
    pairs = pair_list(n)
    hist: Counter = Counter()
    if kind == "graph":
        for mask in range(lo, hi):
            hist[_graph_components(n, mask, pairs)] += 1
    else:
        for mask in range(lo, hi):
            hist[len(tarjan_scc(n, _out_masks(n, mask, pairs)))] += 1
    return hist


def component_histogram_exhaustive(kind: str, n: int, *, limit: int = DEFAULT_LIMIT,
                                   allow_n7: bool = False, workers: int = 1) -> dict[int, int]:
    """``m -> number of instances with exactly m components``, over all instances.

    With ``workers > 1`` the mask range is split evenly across processes; the
    merged histogram equals the serial one.
    """
    if kind not in ("graph", "tournament"):
        raise UsageError(f"unknown kind {kind!r}")
    _check_cap(n, limit, allow_n7)
    total = 1 << comb(n, 2)
    if workers <= 1 or total < 4096:
        hist = _histogram_chunk(kind, n, 0, total)
    else:
        bounds = [total * j // workers for j in range(workers + 1)]
        hist = Counter()
        with ProcessPoolExecutor(workers) as pool:
            futures = [pool.submit(_histogram_chunk, kind, n, bounds[j], bounds[j + 1])
                       for j in range(workers)]
            for f in futures:
                hist.update(f.result())
    return dict(sorted(hist.items()))


def count_connected_exhaustive(n: int, **kw) -> int:
    return component_histogram_exhaustive("graph", n, **kw).get(1, 0)


def count_irreducible_exhaustive(n: int, **kw) -> int:
    return component_histogram_exhaustive("tournament", n, **kw).get(1, 0)


# -- Monte Carlo -----------------------------------------------------------------------


@dataclass(frozen=True)
class MCResult:
    kind: str
    n: int
    p: Fraction
    trials: int
    seed: int
    successes: int

    @property
    def estimate(self) -> float:
        return self.successes / self.trials

    @property
    def stderr(self) -> float:
        est = self.estimate
        return sqrt(est * (1 - est) / self.trials)


def _chunk_successes(kind: str, n: int, p: Fraction, size: int, seed_seq) -> int:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    npairs = comb(n, 2)
    bits = rng.integers(0, p.denominator, size=(size, npairs), dtype=np.int64) < p.numerator
    adj = np.zeros((size, n, n), dtype=np.float32)
    us, vs = zip(*pair_list(n)) if npairs else ((), ())
    us, vs = np.array(us, dtype=np.intp), np.array(vs, dtype=np.intp)
    if kind == "graph":
        adj[:, us, vs] = bits
        adj[:, vs, us] = bits
        return int(_reaches_all(adj).sum())
    adj[:, us, vs] = bits
    adj[:, vs, us] = ~bits
    ok = _reaches_all(adj) & _reaches_all(adj.transpose(0, 2, 1))
    return int(ok.sum())


def _reaches_all(adj: np.ndarray) -> np.ndarray:
    """Per instance: does vertex 0 reach every vertex along arcs of ``adj``?"""
    size, n, _ = adj.shape
    reach = np.zeros((size, 1, n), dtype=np.float32)
    reach[:, 0, 0] = 1
    for _ in range(n - 1):
        nxt = np.maximum(reach, (reach @ adj > 0).astype(np.float32))
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return reach[:, 0, :].all(axis=1)


def mc_estimate(kind: str, n: int, p, trials: int, seed: int) -> MCResult:
    """Fraction of random instances that are connected (graphs) or irreducible.

    Each pair is drawn as an exact Bernoulli(p) by comparing a uniform integer
    in ``[0, denominator)`` with the numerator.  Tournaments require p = 1/2.
    """
    p = Fraction(p)
    if not 0 < p < 1:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    if kind == "tournament" and p != Fraction(1, 2):
        raise DomainError("uniform tournaments have p = 1/2")
    if kind not in ("graph", "tournament"):
        raise UsageError(f"unknown kind {kind!r}")
    if trials < 1:
        raise UsageError("trials must be >= 1")
    if n < 1:
        raise UsageError("n must be >= 1")
    nchunks = -(-trials // MC_CHUNK)
    children = np.random.SeedSequence(seed).spawn(nchunks)
    successes = 0
    for j, child in enumerate(children):
        size = min(MC_CHUNK, trials - j * MC_CHUNK)
        successes += _chunk_successes(kind, n, p, size, child)
    return MCResult(kind, n, p, trials, seed, successes)
