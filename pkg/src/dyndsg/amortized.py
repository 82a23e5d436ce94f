"""Maintainer with amortized O(1/alpha) repair work per update."""

from __future__ import annotations

from .core import Structure


class AmortizedMaintainer(Structure):
    """Repairs every stale label it finds, flipping toward lighter tails.

    Maintains, for every live direction ``u -> v``::

        lab_u >= lab_v - 1
        indeg(v) <= (1 + alpha) * lab_v + 1
        lab_u <= (1 + alpha) * (indeg(u) + 1)

    Cascades are followed with a loop instead of recursion since their depth
    is unbounded here.
    """

    def _check_inc(self, v: int) -> None:
        p, q = self._ap, self._aq
        qp = q + p
        indeg = self.degrees.indeg
        c = self.counters
        while v is not None:
            c.calls += 1
            c.op_calls += 1
            if self.trace is not None:
                self.trace.append(("inc", v))
            nxt = None
            lst = self.in_index[v]
            while True:
                e = lst.min_entry()
                if e is None:
                    break
                dv = indeg[v]
                # indeg(v) > (1 + alpha) * label + 1
                if q * dv <= qp * e.group.label + q:
                    break
                c.arcs_processed += 1
                c.op_iterations += 1
                arc = e.owner
                u = arc.tail
                if indeg[u] < dv:
                    self.flip(arc)
                    nxt = u
                    break
                self.set_arc_labels(arc)
            v = nxt

    def _check_dec(self, u: int) -> None:
        p, q = self._ap, self._aq
        qp = q + p
        indeg = self.degrees.indeg
        c = self.counters
        while u is not None:
            c.calls += 1
            c.op_calls += 1
            if self.trace is not None:
                self.trace.append(("dec", u))
            nxt = None
            lst = self.out_index[u]
            while True:
                e = lst.max_entry()
                if e is None:
                    break
                du = indeg[u]
                # label > (1 + alpha) * indeg(u) + 1
                if q * e.group.label <= qp * du + q:
                    break
                c.arcs_processed += 1
                c.op_iterations += 1
                arc = e.owner
                v = arc.head
                if du < indeg[v]:
                    self.flip(arc)
                    nxt = v
                    break
                self.set_arc_labels(arc)
            u = nxt
