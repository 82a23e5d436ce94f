"""Orientation maintenance and density estimation for rank-r hypergraphs.

An oriented hyperedge has one head; each endpoint keeps its own label. The
head's label sits in the head's in-cut index and every other endpoint's
label sits in that endpoint's out-cut index, so the extremal-label edge of
any vertex is still found in O(1); processing an edge then costs one scan of
its endpoints.

Parallel hyperedges over the same endpoint set share one record whose
copies are counted per head choice, exactly like the two directions of a
graph edge; handles are counted references into that record.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .config import Config
from .core import Counters, GraphError, InternalError
from .fractional import extract_prefix, level_thresholds, local_constants, truncation_cap
from .labels import DegreeTable, Entry, LabelList
from .worstcase import log_ceil


class HyperDirection:
    """Copies of one hyperedge that share the same head."""

    __slots__ = ("record", "head", "count", "labels", "entries")

    def __init__(self, record: "Hyperedge", head: int) -> None:
        self.record = record
        self.head = head
        self.count = 0
        self.labels: list[int] | None = None
        self.entries = [Entry(self) for _ in record.endpoints]

    def __repr__(self) -> str:
        return f"HyperDirection({self.record.endpoints} -> {self.head}, count={self.count}, labels={self.labels})"


class Hyperedge:
    """All live copies of one endpoint set (stored sorted)."""

    __slots__ = ("endpoints", "dirs")

    def __init__(self, endpoints: tuple[int, ...]) -> None:
        self.endpoints = endpoints
        self.dirs: dict[int, HyperDirection] = {}

    @property
    def multiplicity(self) -> int:
        return sum(d.count for d in self.dirs.values())

    def heads(self) -> dict[int, int]:
        return {h: d.count for h, d in self.dirs.items() if d.count}


class HyperMaintainer:
    """Budgeted maintainer over hyperedges; optional truncation at ``threshold``."""

    def __init__(self, config: Config, threshold: int | None = None) -> None:
        self.config = config
        self.n = config.n
        self.rank = config.rank
        self.threshold = threshold
        self._ap, self._aq = config.alpha.numerator, config.alpha.denominator
        self.budget = config.budget
        self.degrees = DegreeTable(self.n)
        self.in_index = [LabelList() for _ in range(self.n)]
        self.out_index = [LabelList() for _ in range(self.n)]
        self.records: dict[tuple[int, ...], Hyperedge] = {}
        # handle -> [endpoint set, copies held]
        self.handles: dict[int, list] = {}
        self._next_id = 0
        self.counters = Counters()
        self.endpoint_scans = 0
        self.on_flip = None
        self.trace: list | None = None
        if threshold is None:
            self.key = self.degrees.indeg.__getitem__

    # -- degrees and labels ------------------------------------------------

    def key(self, v: int) -> int:
        d = self.degrees.indeg[v]
        t = self.threshold
        return d if t is None or d < t else t

    def in_degree(self, v: int) -> int:
        return self.degrees.indeg[v]

    @property
    def max_deg(self) -> int:
        return self.degrees.max_deg

    @property
    def max_key(self) -> int:
        d = self.degrees.max_deg
        t = self.threshold
        return d if t is None or d < t else t

    def _inc(self, v: int) -> bool:
        old = self.key(v)
        self.degrees.inc(v)
        if self.key(v) == old:
            return False
        self.in_index[v].key_up(old)
        self.out_index[v].key_up(old)
        return True

    def _dec(self, v: int) -> bool:
        old = self.key(v)
        self.degrees.dec(v)
        new = self.key(v)
        if new == old:
            return False
        self.in_index[v].key_down(new)
        self.out_index[v].key_down(new)
        return True

    def _attach(self, d: HyperDirection) -> None:
        labels = []
        for x, entry in zip(d.record.endpoints, d.entries):
            lab = self.key(x)
            labels.append(lab)
            if x == d.head:
                self.in_index[x].push(entry, lab)
            else:
                self.out_index[x].push(entry, lab)
        d.labels = labels

    def _detach(self, d: HyperDirection) -> None:
        for x, entry in zip(d.record.endpoints, d.entries):
            if x == d.head:
                self.in_index[x].remove(entry)
            else:
                self.out_index[x].remove(entry)

    def relabel(self, d: HyperDirection) -> None:
        if d.count < 1:
            raise InternalError(f"relabel of empty {d!r}")
        self._detach(d)
        self._attach(d)
        self.counters.label_resets += 1

    def _direction(self, rec: Hyperedge, head: int) -> HyperDirection:
        d = rec.dirs.get(head)
        if d is None:
            d = rec.dirs[head] = HyperDirection(rec, head)
        return d

    def _add(self, rec: Hyperedge, head: int) -> bool:
        d = self._direction(rec, head)
        if d.count:
            self._detach(d)
        d.count += 1
        changed = self._inc(head)
        self._attach(d)
        return changed

    def _drop(self, d: HyperDirection) -> None:
        d.count -= 1
        if d.count == 0:
            self._detach(d)
            d.labels = None
            del d.record.dirs[d.head]

    def reorient(self, d: HyperDirection, new_head: int) -> tuple[bool, bool]:
        """Move one copy from head ``d.head`` to ``new_head``; relabel the target.

        Returns whether the key degrees of (new_head, old head) changed.
        """
        if d.count < 1:
            raise InternalError(f"reorient of empty {d!r}")
        old = d.head
        if self.on_flip is not None:
            self.on_flip(new_head, old, self.key(new_head), self.key(old))
        self._drop(d)
        old_changed = self._dec(old)
        new_changed = self._inc(new_head)
        rev = self._direction(d.record, new_head)
        if rev.count:
            self._detach(rev)
        rev.count += 1
        self._attach(rev)
        self.counters.flips += 1
        return new_changed, old_changed

    def _lightest(self, rec: Hyperedge, exclude: int) -> int:
        key = self.key
        best = None
        for x in rec.endpoints:
            if x != exclude and (best is None or (key(x), x) < (key(best), best)):
                best = x
        self.endpoint_scans += len(rec.endpoints)
        return best

    # -- public updates ----------------------------------------------------

    def _validate(self, endpoints) -> tuple[int, ...]:
        eps = tuple(endpoints)
        if not 2 <= len(eps) <= self.rank:
            raise GraphError(f"hyperedge size {len(eps)} outside [2, {self.rank}]")
        for x in eps:
            if not isinstance(x, int) or not 0 <= x < self.n:
                raise GraphError(f"vertex {x!r} out of range [0, {self.n})")
        if len(set(eps)) != len(eps):
            raise GraphError(f"duplicate endpoints in {eps}")
        return eps

    def insert_hyperedge(self, endpoints, copies: int = 1) -> int:
        """Add a hyperedge with ``copies`` parallel copies; returns its handle."""
        eps = self._validate(endpoints)
        eid = self._next_id
        self._next_id += 1
        self.handles[eid] = [eps, 0]
        self.add_copy(eid, copies)
        return eid

    def add_copy(self, eid: int, copies: int = 1) -> None:
        """Give handle ``eid`` more copies, one update each, headed at the lightest endpoint."""
        h = self._live(eid)
        members = tuple(sorted(h[0]))
        rec = self.records.get(members)
        if rec is None:
            rec = self.records[members] = Hyperedge(members)
            self.counters.records_allocated += 1
        key = self.key
        for _ in range(copies):
            h[1] += 1
            head = min(members, key=lambda x: (key(x), x))
            self._begin_op()
            if self._add(rec, head):
                self._repair([("inc", head)])
            self._end_op()

    def remove_copy(self, eid: int, copies: int = 1) -> None:
        """Drop copies held by ``eid``, each taken from the heaviest head."""
        h = self._live(eid)
        if h[1] < copies:
            raise GraphError(f"hyperedge {eid!r} holds only {h[1]} copies")
        rec = self.records[tuple(sorted(h[0]))]
        key = self.key
        for _ in range(copies):
            d = max(rec.dirs.values(), key=lambda d: (key(d.head), -d.head))
            head = d.head
            h[1] -= 1
            self._begin_op()
            self._drop(d)
            changed = self._dec(head)
            if not rec.dirs:
                del self.records[rec.endpoints]
            if changed:
                self._repair([("dec", head)])
            self._end_op()

    def delete_hyperedge(self, eid: int) -> None:
        """Remove every copy held by handle ``eid``; the handle dies."""
        h = self._live(eid)
        self.remove_copy(eid, h[1])
        del self.handles[eid]

    def _live(self, eid: int) -> list:
        h = self.handles.get(eid)
        if h is None:
            raise GraphError(f"hyperedge {eid!r} is not live")
        return h

    # -- repairs -----------------------------------------------------------

    def _repair(self, stack: list[tuple[str, int]]) -> None:
        p, q = self._ap, self._aq
        qp = q + p
        q2, q2p = 2 * q, 2 * q + p
        key = self.key
        budget = self.budget
        c = self.counters
        while stack:
            kind, x = stack.pop()
            c.calls += 1
            c.op_calls += 1
            if self.trace is not None:
                self.trace.append((kind, x))
            if kind == "inc":
                lst = self.in_index[x]
                for _ in range(budget):
                    e = lst.min_entry()
                    if e is None:
                        break
                    dx = key(x)
                    if q2 * dx < q2p * e.group.label or dx == 0:
                        break
                    c.arcs_processed += 1
                    c.op_iterations += 1
                    d = e.owner
                    m = self._lightest(d.record, x)
                    if q * dx >= qp * (key(m) + 1):
                        m_moved, _ = self.reorient(d, m)
                        if m_moved:
                            stack.append(("inc", m))
                        break
                    self.relabel(d)
            else:
                lst = self.out_index[x]
                for _ in range(budget):
                    e = lst.max_entry()
                    if e is None:
                        break
                    dx = key(x)
                    lab = e.group.label
                    if q2 * lab < q2p * dx or lab == 0:
                        break
                    c.arcs_processed += 1
                    c.op_iterations += 1
                    d = e.owner
                    v = d.head
                    m = self._lightest(d.record, v)
                    if q * key(v) >= qp * (key(m) + 1):
                        m_moved, v_moved = self.reorient(d, m)
                        if v_moved:
                            stack.append(("dec", v))
                        if m == x:
                            break
                        if m_moved:
                            stack.append(("inc", m))
                        continue
                    self.relabel(d)

    def _begin_op(self) -> None:
        self.counters.op_iterations = 0
        self.counters.op_calls = 0

    def _end_op(self) -> None:
        c = self.counters
        c.ops += 1
        c.max_op_iterations = max(c.max_op_iterations, c.op_iterations)
        c.max_depth = max(c.max_depth, c.op_calls)

    def iteration_bound(self, mu: int | None = None) -> int:
        if self.threshold is not None:
            mu = self.threshold
        elif mu is None:
            mu = self.max_key
        return self.budget * (log_ceil(self.config.alpha, mu + 1) + 1)

    # -- views -------------------------------------------------------------

    def directions(self):
        for rec in self.records.values():
            for d in rec.dirs.values():
                if d.count:
                    yield d

    def hyperedges(self) -> dict[int, tuple[int, ...]]:
        return {eid: h[0] for eid, h in self.handles.items()}


def hyper_violations(s: HyperMaintainer) -> list[str]:
    """Structural audit plus per (head, tail) label relations and local optimality."""
    errs = list(s.degrees.check())
    p, q = s._ap, s._aq
    qp = q + p
    q3 = q**3
    indeg = [0] * s.n
    want_in = [set() for _ in range(s.n)]
    want_out = [set() for _ in range(s.n)]
    for d in s.directions():
        rec = d.record
        h = d.head
        indeg[h] += d.count
        for x, lab, entry in zip(rec.endpoints, d.labels, d.entries):
            if entry.label != lab:
                errs.append(f"index label mismatch on {d!r}")
            (want_in if x == h else want_out)[x].add(id(entry))
        lh = d.labels[rec.endpoints.index(h)]
        dh = s.key(h)
        if q * dh > qp * (lh + 1):
            errs.append(f"head: {d!r} key={dh}")
        for x, lab in zip(rec.endpoints, d.labels):
            if x == h:
                continue
            dx = s.key(x)
            if q * lh > qp * (lab + 1):
                errs.append(f"order: {d!r} tail {x}")
            if q * lab > qp * (dx + 1):
                errs.append(f"tail: {d!r} tail {x} key={dx}")
            if q3 * dh > qp**3 * dx + 3 * q3 + 10 * p * q * q:
                errs.append(f"local: {d!r} keys=({dx}, {dh})")
            if s.threshold is not None and max(lab, lh) > s.threshold:
                errs.append(f"label above threshold: {d!r}")
    if indeg != s.degrees.indeg:
        errs.append("in-degrees disagree with head counts")
    held = Counter()
    for eps, copies in s.handles.values():
        held[tuple(sorted(eps))] += copies
    live = {m: r.multiplicity for m, r in s.records.items()}
    if +held != live:
        errs.append("handle copy counts disagree with records")
    for v in range(s.n):
        key = s.key(v)
        for name, lst, want in (("in", s.in_index[v], want_in[v]), ("out", s.out_index[v], want_out[v])):
            errs.extend(f"{name}-index of {v}: {msg}" for msg in lst.check(key))
            if {id(e) for e in lst.entries()} != want or len(lst) != len(want):
                errs.append(f"{name}-index of {v} does not match live directions")
    return errs


class HyperDensityEstimator:
    """Duplicated hypergraph orientation reporting density bounds.

    ``mode`` is ``"worstcase"`` (one duplicated structure) or ``"combined"``
    (truncated duplicated structure plus an unduplicated one, as for graphs).
    """

    def __init__(self, n: int, config: Config | None = None, mode: str = "worstcase") -> None:
        if config is None:
            config = Config(n, rank=3)
        if config.n != n:
            raise ValueError(f"config is for n={config.n}, estimator requested n={n}")
        if mode not in ("worstcase", "combined"):
            raise ValueError(f"hypergraph mode must be worstcase or combined, got {mode!r}")
        self.n = n
        self.config = config
        self.mode = mode
        self.k = config.dup_k
        self.T: int | None = None
        self.base: HyperMaintainer | None = None
        if mode == "combined":
            self.T = config.truncation_threshold()
            self.dup = HyperMaintainer(config, threshold=truncation_cap(config.eps, self.k, self.T))
            self.base = HyperMaintainer(config)
        else:
            self.dup = HyperMaintainer(config)
        self.edges: dict[int, tuple[int, ...]] = {}
        self._ids: dict[int, tuple[int, int | None]] = {}
        self._next = 0

    @property
    def structures(self) -> list[HyperMaintainer]:
        return [s for s in (self.dup, self.base) if s is not None]

    @property
    def m(self) -> int:
        return len(self.edges)

    def insert_hyperedge(self, endpoints) -> int:
        eps = self.dup._validate(endpoints)
        dup_id = self.dup.insert_hyperedge(eps, copies=self.k)
        base_id = self.base.insert_hyperedge(eps) if self.base is not None else None
        eid = self._next
        self._next += 1
        self.edges[eid] = eps
        self._ids[eid] = (dup_id, base_id)
        return eid

    def delete_hyperedge(self, eid: int) -> None:
        if eid not in self.edges:
            raise GraphError(f"hyperedge {eid!r} is not live")
        dup_id, base_id = self._ids.pop(eid)
        self.dup.delete_hyperedge(dup_id)
        if base_id is not None:
            self.base.delete_hyperedge(base_id)
        del self.edges[eid]

    def find(self, endpoints) -> int:
        """Oldest live handle with this endpoint set."""
        target = frozenset(endpoints)
        for eid, eps in self.edges.items():
            if frozenset(eps) == target:
                return eid
        raise GraphError(f"hyperedge {sorted(target)} not present")

    def truncated_accepted(self) -> bool:
        if self.mode != "combined":
            return True
        return self.dup.max_key < (1 + self.config.eps) * self.k * self.T

    def governing(self) -> tuple[HyperMaintainer, int]:
        if self.truncated_accepted():
            return self.dup, self.k
        return self.base, 1

    def hyper_density_value(self) -> Fraction:
        s, scale = self.governing()
        return Fraction(s.max_deg, scale)

    density_value = hyper_density_value

    def hyper_densest_subgraph(self) -> list[int]:
        s, _ = self.governing()
        growth, beta = local_constants(self.config.alpha)
        return extract_prefix([s.key(v) for v in range(self.n)], growth, beta, self.config.eps)

    densest_subgraph = hyper_densest_subgraph

    def thresholds(self):
        s, _ = self.governing()
        growth, beta = local_constants(self.config.alpha)
        return level_thresholds([s.key(v) for v in range(self.n)], growth, beta, self.config.eps)

    def subgraph_density(self, vertices) -> Fraction:
        s = set(vertices)
        if not s:
            raise ValueError("density of an empty vertex set is undefined")
        inside = sum(1 for eps in self.edges.values() if all(x in s for x in eps))
        return Fraction(inside, len(s))

    def edge_list(self) -> list[tuple[int, ...]]:
        return list(self.edges.values())

    @property
    def arc_records(self) -> int:
        return sum(len(s.records) for s in self.structures)

    def size(self) -> int:
        """Total endpoint count p of the logical hypergraph."""
        return sum(len(e) for e in self.edges.values())

    def endpoint_counts(self) -> Counter:
        return Counter(x for e in self.edges.values() for x in e)
