"""Budgeted maintainers: bounded loop length and recursion depth per update.

Each check call looks at no more than ``floor(C / alpha)`` eligible arcs and
flips only when the head is heavier than the tail by a ``(1 + alpha)``
factor, so every recursive step moves geometrically in key degree.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .config import Config
from .core import Structure


class WorstCaseMaintainer(Structure):
    """Maintains, for every live direction ``u -> v``::

        lab_v <= (1 + alpha) * (lab_u + 1)
        key(v) <= (1 + alpha) * (lab_v + 1)
        lab_u <= (1 + alpha) * (key(u) + 1)
    """

    def _check_inc(self, v: int) -> None:
        p, q = self._ap, self._aq
        qp = q + p
        q2, q2p = 2 * q, 2 * q + p
        key = self.key
        budget = self.budget
        c = self.counters
        while v is not None:
            c.calls += 1
            c.op_calls += 1
            if self.trace is not None:
                self.trace.append(("inc", v))
            nxt = None
            lst = self.in_index[v]
            for _ in range(budget):
                e = lst.min_entry()
                if e is None:
                    break
                dv = key(v)
                lab = e.group.label
                # eligible: key(v) >= (1 + alpha/2) * label, never at 0/0
                if q2 * dv < q2p * lab or dv == 0:
                    break
                c.arcs_processed += 1
                c.op_iterations += 1
                arc = e.owner
                u = arc.tail
                # flip: key(v) >= (1 + alpha) * (key(u) + 1)
                if q * dv >= qp * (key(u) + 1):
                    u_moved, _ = self.flip(arc)
                    if u_moved:
                        nxt = u
                    break
                self.set_arc_labels(arc)
            v = nxt

    def _check_dec(self, u: int) -> None:
        p, q = self._ap, self._aq
        qp = q + p
        q2, q2p = 2 * q, 2 * q + p
        key = self.key
        budget = self.budget
        c = self.counters
        while u is not None:
            c.calls += 1
            c.op_calls += 1
            if self.trace is not None:
                self.trace.append(("dec", u))
            nxt = None
            lst = self.out_index[u]
            for _ in range(budget):
                e = lst.max_entry()
                if e is None:
                    break
                du = key(u)
                lab = e.group.label
                # eligible: label >= (1 + alpha/2) * key(u), never at 0/0
                if q2 * lab < q2p * du or lab == 0:
                    break
                c.arcs_processed += 1
                c.op_iterations += 1
                arc = e.owner
                v = arc.head
                if q * key(v) >= qp * (du + 1):
                    _, v_moved = self.flip(arc)
                    if v_moved:
                        nxt = v
                    break
                self.set_arc_labels(arc)
            u = nxt

    def iteration_bound(self, mu: int | None = None) -> int:
        """Per-update loop-iteration ceiling ``budget * (ceil(log_{1+a}(mu+1)) + 1)``."""
        if mu is None:
            mu = self.max_key
        return self.budget * (log_ceil(self.config.alpha, mu + 1) + 1)


@lru_cache(maxsize=4096)
def log_ceil(alpha, x: int) -> int:
    """ceil(log_{1+alpha} x) for integer x >= 1, exact."""
    if x <= 1:
        return 0
    base = 1 + alpha
    k = max(0, math.floor(math.log(x) / math.log1p(float(alpha))) - 1)
    power = base**k
    while power < x:
        power *= base
        k += 1
    while k > 0 and power / base >= x:
        power /= base
        k -= 1
    return k


class ThresholdMaintainer(WorstCaseMaintainer):
    """Worst-case maintainer acting on in-degrees truncated at ``T``.

    Labels never exceed ``T`` and recursion stops at saturated vertices,
    which caps the depth by ``log_{1+alpha} T`` regardless of the density.
    """

    def __init__(self, config: Config, threshold: int | None = None) -> None:
        if threshold is None:
            threshold = config.truncation_threshold()
        super().__init__(config, threshold=threshold)

    def iteration_bound(self, mu: int | None = None) -> int:
        return self.budget * (log_ceil(self.config.alpha, self.threshold + 1) + 1)
