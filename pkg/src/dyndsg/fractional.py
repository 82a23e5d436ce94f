"""Density estimation on top of the orientation maintainers.

Each logical edge is inserted ``k`` times into a duplicated structure, so a
maximum in-degree ``mu`` certifies ``OPT <= mu / k``. Copies share one arc
record per vertex pair, so space does not grow with ``k``.

Modes:

``amortized`` / ``worstcase``
    one duplicated structure of that kind.
``combined``
    a truncated duplicated structure run alongside an unduplicated
    worst-case structure. Truncation sits just above ``(1 + eps) * k * T``.
    While the maximum truncated in-degree stays below ``(1 + eps) * k * T``
    no vertex is saturated and the truncated answer stands; otherwise the
    density is at least about ``T`` and the unduplicated structure answers.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .amortized import AmortizedMaintainer
from .config import Config
from .core import GraphError, Structure
from .worstcase import ThresholdMaintainer, WorstCaseMaintainer

MODES = ("amortized", "worstcase", "combined")


@dataclass(frozen=True)
class Thresholds:
    """Degree levels ``mu_0 < mu_1 < ...`` and nested prefix sizes.

    ``sizes[i - 1] = |S_i|`` with ``S_i = {v : deg(v) >= levels[K - i]}``.
    """

    levels: tuple[int, ...]
    sizes: tuple[int, ...]
    chosen: int | None


def level_thresholds(degrees, growth: Fraction, beta: Fraction, eps: Fraction) -> Thresholds:
    """Levels ``mu_j = ceil(growth * mu_{j-1} + beta)`` and the first good index.

    Under ``deg(head) <= growth * deg(tail) + beta`` on every arc, the
    in-neighbours of ``S_i`` lie in ``S_{i+1}``; rounding levels up keeps
    that true for integer degrees. ``chosen`` is the smallest ``i`` with
    ``|S_{i+1}| <= (1 + eps) |S_i|``, so ``S_{chosen+1}`` is the answer.
    """
    mu = max(degrees, default=0)
    if mu == 0:
        return Thresholds((0,), (), None)
    levels = [0]
    while levels[-1] <= mu:
        levels.append(math.ceil(growth * levels[-1] + beta))
    top = len(levels) - 1
    counts = Counter(degrees)
    # sizes[i-1] = #{v : deg >= levels[top - i]}, i = 1..top
    sizes = []
    running = 0
    by_degree = sorted(counts.items(), reverse=True)
    pos = 0
    for i in range(1, top + 1):
        floor = levels[top - i]
        while pos < len(by_degree) and by_degree[pos][0] >= floor:
            running += by_degree[pos][1]
            pos += 1
        sizes.append(running)
    chosen = None
    for i in range(1, top):
        if sizes[i] <= (1 + eps) * sizes[i - 1]:
            chosen = i
            break
    return Thresholds(tuple(levels), tuple(sizes), chosen)


def extract_prefix(degrees, growth: Fraction, beta: Fraction, eps: Fraction) -> list[int]:
    """Vertices in decreasing degree order, cut at the chosen level."""
    th = level_thresholds(degrees, growth, beta, eps)
    if not th.sizes:
        return []
    size = th.sizes[th.chosen] if th.chosen is not None else th.sizes[-1]
    order = sorted(range(len(degrees)), key=lambda v: (-degrees[v], v))
    return order[:size]


def truncation_cap(eps: Fraction, k: int, T: int) -> int:
    """Smallest integer above ``(1 + eps) * k * T``."""
    return math.floor((1 + eps) * k * T) + 1


def local_constants(alpha: Fraction) -> tuple[Fraction, Fraction]:
    """(growth, beta) of the local optimality every maintainer guarantees."""
    return (1 + alpha) ** 3, 3 + 10 * alpha


class DensityEstimator:
    """(1 +- eps)-approximate densest subgraph under edge insertions and deletions."""

    def __init__(self, n: int, config: Config | None = None, mode: str = "combined") -> None:
        if config is None:
            config = Config(n)
        if config.n != n:
            raise ValueError(f"config is for n={config.n}, estimator requested n={n}")
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        self.n = n
        self.config = config
        self.mode = mode
        self.k = config.dup_k
        self.base: Structure | None = None
        self.T: int | None = None
        if mode == "amortized":
            self.dup: Structure = AmortizedMaintainer(config)
        elif mode == "worstcase":
            self.dup = WorstCaseMaintainer(config)
        else:
            self.T = config.truncation_threshold()
            self.dup = ThresholdMaintainer(config, threshold=truncation_cap(config.eps, self.k, self.T))
            self.base = WorstCaseMaintainer(config)
        self.edges: Counter[tuple[int, int]] = Counter()
        self.m = 0

    @property
    def structures(self) -> list[Structure]:
        return [s for s in (self.dup, self.base) if s is not None]

    def _pair(self, u, v) -> tuple[int, int]:
        for x in (u, v):
            if not isinstance(x, int) or not 0 <= x < self.n:
                raise GraphError(f"vertex {x!r} out of range [0, {self.n})")
        if u == v:
            raise GraphError(f"self-loop at {u} rejected")
        return (u, v) if u < v else (v, u)

    def insert_edge(self, u: int, v: int) -> None:
        key = self._pair(u, v)
        self.dup.insert(u, v, self.k)
        if self.base is not None:
            self.base.insert(u, v)
        self.edges[key] += 1
        self.m += 1

    def delete_edge(self, u: int, v: int) -> None:
        key = self._pair(u, v)
        if not self.edges.get(key):
            raise GraphError(f"edge {{{u}, {v}}} not present")
        self.dup.delete(u, v, self.k)
        if self.base is not None:
            self.base.delete(u, v)
        self.edges[key] -= 1
        if not self.edges[key]:
            del self.edges[key]
        self.m -= 1

    # -- queries -----------------------------------------------------------

    def truncated_accepted(self) -> bool:
        """Combined mode: is the truncated structure's answer in force?"""
        if self.mode != "combined":
            return True
        return self.dup.max_key < (1 + self.config.eps) * self.k * self.T

    def governing(self) -> tuple[Structure, int]:
        """Structure whose orientation answers queries, and its duplication."""
        if self.truncated_accepted():
            return self.dup, self.k
        return self.base, 1

    def density_value(self) -> Fraction:
        """Max in-degree over duplication: always an upper bound on the optimum."""
        s, scale = self.governing()
        return Fraction(s.max_deg, scale)

    def densest_subgraph(self) -> list[int]:
        """Degree-ordered prefix certified by the level-set argument."""
        s, _ = self.governing()
        degrees = [s.key(v) for v in range(self.n)]
        growth, beta = local_constants(self.config.alpha)
        return extract_prefix(degrees, growth, beta, self.config.eps)

    def thresholds(self) -> Thresholds:
        s, _ = self.governing()
        growth, beta = local_constants(self.config.alpha)
        return level_thresholds([s.key(v) for v in range(self.n)], growth, beta, self.config.eps)

    def subgraph_density(self, vertices) -> Fraction:
        """Exact |E(S)| / |S| in the logical (unduplicated) graph."""
        s = set(vertices)
        if not s:
            raise ValueError("density of an empty vertex set is undefined")
        inside = sum(c for (u, v), c in self.edges.items() if u in s and v in s)
        return Fraction(inside, len(s))

    def edge_list(self) -> list[tuple[int, int]]:
        return [e for e, c in sorted(self.edges.items()) for _ in range(c)]

    @property
    def arc_records(self) -> int:
        """Live arc records across inner structures (independent of k)."""
        return sum(len(s.records) for s in self.structures)

    @property
    def records_allocated(self) -> int:
        return sum(s.counters.records_allocated for s in self.structures)
