"""Exact ground truth for desk-scale graphs and hypergraphs.

Densities are exact :class:`~fractions.Fraction` values throughout. Graphs
are given as ``(n, edges)`` with ``edges`` an iterable of vertex pairs;
repeated pairs are parallel edges. Hypergraphs use tuples of endpoints.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

BRUTE_FORCE_MAX_N = 24
HYPER_MAX_N = 20
ENUM_MAX_M = 20


class OracleSizeError(ValueError):
    """Instance too large for the requested exact method."""


@dataclass(frozen=True)
class OracleResult:
    opt_density: Fraction
    witness_set: tuple[int, ...]
    minmax_orientation: int | None = None


def density(edges, vertices) -> Fraction:
    """|E(S)| / |S| with E(S) the edges (or hyperedges) fully inside S."""
    s = set(vertices)
    if not s:
        raise ValueError("density of an empty vertex set is undefined")
    inside = sum(1 for e in edges if all(x in s for x in e))
    return Fraction(inside, len(s))


def _subset_search(n: int, masks: list[int]) -> OracleResult:
    if n == 0 or not masks:
        return OracleResult(Fraction(0), ())
    subsets = np.arange(1, 1 << n, dtype=np.int64)
    inside = np.zeros(subsets.shape, dtype=np.int64)
    for m in masks:
        inside += (subsets & m) == m
    sizes = np.zeros(subsets.shape, dtype=np.int64)
    for v in range(n):
        sizes += (subsets >> v) & 1
    best = Fraction(0)
    for size in range(1, n + 1):
        sel = sizes == size
        top = int(inside[sel].max())
        if Fraction(top, size) > best:
            best = Fraction(top, size)
    hits = subsets[inside * best.denominator == sizes * best.numerator]
    witness = min(tuple(v for v in range(n) if (int(h) >> v) & 1) for h in hits)
    return OracleResult(best, witness)


def exact_density_bruteforce(n: int, edges) -> OracleResult:
    """Maximise |E(S)|/|S| over every non-empty vertex subset.

    The witness is the lexicographically smallest maximiser. With no edges
    the optimum is 0 and the witness is empty.
    """
    if n > BRUTE_FORCE_MAX_N:
        raise OracleSizeError(
            f"n={n} exceeds {BRUTE_FORCE_MAX_N} for enumeration; use exact_density_flow"
        )
    return _subset_search(n, [(1 << u) | (1 << v) for u, v in edges])


def exact_hyper_density(n: int, hyperedges) -> OracleResult:
    """Densest sub-hypergraph by subset enumeration (n <= 20)."""
    if n > HYPER_MAX_N:
        raise OracleSizeError(f"n={n} exceeds {HYPER_MAX_N} for hypergraph enumeration")
    masks = []
    for e in hyperedges:
        m = 0
        for x in e:
            m |= 1 << x
        masks.append(m)
    return _subset_search(n, masks)


# -- flow route ------------------------------------------------------------


def _density_network(n: int, pairs: Counter, num: int, den: int) -> nx.DiGraph:
    """Edge-node network: a cut of value < den * m exists iff some S has density > num/den."""
    g = nx.DiGraph()
    g.add_node("s")
    g.add_node("t")
    for (u, v), mult in pairs.items():
        node = ("e", u, v)
        g.add_edge("s", node, capacity=den * mult)
        g.add_edge(node, ("v", u))
        g.add_edge(node, ("v", v))
    for v in range(n):
        g.add_edge(("v", v), "t", capacity=num)
    return g


def _denser_than(n, pairs, m, lam: Fraction):
    """Return a vertex set of density > lam, or None if none exists."""
    g = _density_network(n, pairs, lam.numerator, lam.denominator)
    cut, (src, _) = nx.minimum_cut(g, "s", "t")
    if cut >= lam.denominator * m:
        return None
    return sorted(x[1] for x in src if isinstance(x, tuple) and x[0] == "v")


def _candidates(n: int, m: int) -> list[Fraction]:
    return sorted({Fraction(i, j) for j in range(1, n + 1) for i in range(0, m + 1)})


def exact_density_flow(n: int, edges) -> OracleResult:
    """Goldberg-style exact densest subgraph via binary search over i/j.

    Every density is some i/j with i <= m and j <= n, so searching that
    finite set with a max-flow decision procedure is exact. The witness is
    the source side of a minimum cut just below the optimum.
    """
    pairs = Counter((min(u, v), max(u, v)) for u, v in edges)
    m = sum(pairs.values())
    if m == 0:
        return OracleResult(Fraction(0), ())
    cands = _candidates(n, m)
    # invariant: some set is denser than cands[lo]; none is denser than cands[hi]
    lo, hi = 0, len(cands) - 1
    witness = _denser_than(n, pairs, m, cands[lo])
    while hi - lo > 1:
        mid = (lo + hi) // 2
        found = _denser_than(n, pairs, m, cands[mid])
        if found is None:
            hi = mid
        else:
            lo, witness = mid, found
    return OracleResult(cands[hi], tuple(witness))


def fractional_orientation(n: int, edges) -> tuple[Fraction, list[dict[int, Fraction]]]:
    """Optimal fractional orientation: per-edge split ``{endpoint: share}``.

    Returns ``(max_load, y)`` where ``y[i]`` splits ``edges[i]`` between its
    endpoints; ``max_load`` equals the optimum density.
    """
    edges = [tuple(e) for e in edges]
    opt = exact_density_flow(n, edges).opt_density
    if not edges:
        return Fraction(0), []
    num, den = opt.numerator, opt.denominator
    g = nx.DiGraph()
    for i, (u, v) in enumerate(edges):
        g.add_edge("s", ("e", i), capacity=den)
        g.add_edge(("e", i), ("v", u))
        g.add_edge(("e", i), ("v", v))
    for v in range(n):
        g.add_edge(("v", v), "t", capacity=num)
    value, flow = nx.maximum_flow(g, "s", "t")
    if value != den * len(edges):
        raise AssertionError("optimal load does not admit a full orientation")
    y = []
    for i, (u, v) in enumerate(edges):
        out = flow[("e", i)]
        y.append({u: Fraction(out[("v", u)], den), v: Fraction(out[("v", v)], den)})
    loads = [Fraction(0)] * n
    for share in y:
        for v, amount in share.items():
            loads[v] += amount
    return max(loads), y


# -- integral orientations -------------------------------------------------


def _orientable(n: int, edges, cap: int) -> bool:
    g = nx.DiGraph()
    for i, (u, v) in enumerate(edges):
        g.add_edge("s", ("e", i), capacity=1)
        g.add_edge(("e", i), ("v", u), capacity=1)
        g.add_edge(("e", i), ("v", v), capacity=1)
    for v in range(n):
        g.add_edge(("v", v), "t", capacity=cap)
    return nx.maximum_flow_value(g, "s", "t") == len(edges)


def exact_minmax_orientation(n: int, edges, method: str = "auto") -> int:
    """Minimum over orientations of the maximum in-degree.

    ``method`` is ``"enumerate"`` (all 2^m orientations, m <= 20),
    ``"flow"`` (binary search on a bipartite capacity check) or ``"auto"``.
    """
    edges = [tuple(e) for e in edges]
    m = len(edges)
    if m == 0:
        return 0
    if method == "auto":
        method = "enumerate" if m <= 12 else "flow"
    if method == "enumerate":
        if m > ENUM_MAX_M:
            raise OracleSizeError(f"m={m} exceeds {ENUM_MAX_M} for orientation enumeration")
        codes = np.arange(1 << m, dtype=np.int64)
        indeg = np.zeros((1 << m, n), dtype=np.int16)
        for i, (u, v) in enumerate(edges):
            bit = ((codes >> i) & 1).astype(np.int16)
            indeg[:, u] += bit
            indeg[:, v] += 1 - bit
        return int(indeg.max(axis=1).min())
    if method != "flow":
        raise ValueError(f"unknown method {method!r}")
    lo, hi = 0, m
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _orientable(n, edges, mid):
            hi = mid
        else:
            lo = mid
    return hi


def exact_oracle(n: int, edges, with_orientation: bool = False) -> OracleResult:
    """Brute force when small, flow otherwise."""
    edges = [tuple(e) for e in edges]
    res = exact_density_bruteforce(n, edges) if n <= 16 else exact_density_flow(n, edges)
    if with_orientation:
        return OracleResult(res.opt_density, res.witness_set, exact_minmax_orientation(n, edges))
    return res


def all_subset_densities(n: int, edges) -> dict[tuple[int, ...], Fraction]:
    """Every non-empty subset's density; for tiny hand-checked instances."""
    edges = list(edges)
    return {
        s: density(edges, s)
        for size in range(1, n + 1)
        for s in combinations(range(n), size)
    }
