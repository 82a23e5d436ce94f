"""Oriented multigraph state shared by all maintainer variants.

Parallel copies of an edge are stored as two counters on one
:class:`ArcRecord`, one per direction. Each direction with a positive count
owns one label pair shared by all of its copies and one entry in each of two
label indices: the head's in-cut list (keyed by the head-side label) and the
tail's out-cut list (keyed by the tail-side label).

Labels and all comparisons use the *key degree* of a vertex: its in-degree,
or ``min(in-degree, T)`` when the structure is truncated at ``T``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .config import Config, ConfigError
from .labels import DegreeTable, Entry, LabelList


class GraphError(ValueError):
    """Rejected update: self-loop, vertex out of range, or absent edge."""


class InternalError(RuntimeError):
    """A precondition of an internal operation was violated."""


class Arc:
    """One direction ``tail -> head`` of a vertex pair."""

    __slots__ = ("record", "tail", "head", "count", "lab_tail", "lab_head", "in_entry", "out_entry")

    def __init__(self, record: "ArcRecord", tail: int, head: int) -> None:
        self.record = record
        self.tail = tail
        self.head = head
        self.count = 0
        self.lab_tail: int | None = None
        self.lab_head: int | None = None
        self.in_entry = Entry(self)
        self.out_entry = Entry(self)

    def __repr__(self) -> str:
        return (
            f"Arc({self.tail}->{self.head}, count={self.count}, "
            f"labels=({self.lab_tail}, {self.lab_head}))"
        )


class ArcRecord:
    """Both directions of the pair ``u < v``."""

    __slots__ = ("u", "v", "fwd", "bwd")

    def __init__(self, u: int, v: int) -> None:
        self.u, self.v = u, v
        self.fwd = Arc(self, u, v)
        self.bwd = Arc(self, v, u)

    def direction(self, tail: int, head: int) -> Arc:
        return self.fwd if head == self.v else self.bwd

    def reverse(self, arc: Arc) -> Arc:
        return self.bwd if arc is self.fwd else self.fwd

    @property
    def multiplicity(self) -> int:
        return self.fwd.count + self.bwd.count


@dataclass
class Counters:
    arcs_processed: int = 0
    flips: int = 0
    label_resets: int = 0
    calls: int = 0
    max_depth: int = 0
    ops: int = 0
    op_iterations: int = 0
    max_op_iterations: int = 0
    op_calls: int = 0
    records_allocated: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Structure:
    """Orientation state with O(1) label and degree bookkeeping.

    The base class orients each inserted copy toward the endpoint of smaller
    key degree and performs no repairs; the maintainers override
    :meth:`_check_inc` and :meth:`_check_dec`.
    """

    def __init__(self, config: Config, threshold: int | None = None) -> None:
        self.config = config
        self.n = config.n
        self.threshold = threshold
        alpha = config.alpha
        self._ap, self._aq = alpha.numerator, alpha.denominator
        self.budget = config.budget
        self.degrees = DegreeTable(self.n)
        self.in_index = [LabelList() for _ in range(self.n)]
        self.out_index = [LabelList() for _ in range(self.n)]
        self.records: dict[tuple[int, int], ArcRecord] = {}
        self.counters = Counters()
        self.on_flip = None
        if threshold is None:
            # untruncated keys are plain in-degrees; skip the clamp
            self.key = self.degrees.indeg.__getitem__
        # set to a list to record every check call as ("inc" | "dec", vertex)
        self.trace: list | None = None

    # -- degrees -----------------------------------------------------------

    def in_degree(self, v: int) -> int:
        return self.degrees.indeg[v]

    def key(self, v: int) -> int:
        d = self.degrees.indeg[v]
        t = self.threshold
        return d if t is None or d < t else t

    def truncated_in_degree(self, v: int) -> int:
        if self.threshold is None:
            raise InternalError("structure has no truncation threshold")
        return self.key(v)

    @property
    def max_deg(self) -> int:
        return self.degrees.max_deg

    @property
    def max_key(self) -> int:
        d = self.degrees.max_deg
        t = self.threshold
        return d if t is None or d < t else t

    def _inc(self, v: int) -> bool:
        """Raise indeg(v); True when the key degree moved."""
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

    # -- labels ------------------------------------------------------------

    def _attach(self, arc: Arc) -> None:
        lt = arc.lab_tail = self.key(arc.tail)
        lh = arc.lab_head = self.key(arc.head)
        self.in_index[arc.head].push(arc.in_entry, lh)
        self.out_index[arc.tail].push(arc.out_entry, lt)

    def _detach(self, arc: Arc) -> None:
        self.in_index[arc.head].remove(arc.in_entry)
        self.out_index[arc.tail].remove(arc.out_entry)

    def set_arc_labels(self, arc: Arc) -> None:
        """Reset both labels of ``arc`` (all copies) to the current key degrees."""
        if arc.count < 1:
            raise InternalError(f"relabel of empty direction {arc.tail}->{arc.head}")
        self._detach(arc)
        self._attach(arc)
        self.counters.label_resets += 1

    def min_in_label_arc(self, v: int) -> tuple[Arc, int] | None:
        e = self.in_index[v].min_entry()
        return None if e is None else (e.owner, e.group.label)

    def max_out_label_arc(self, u: int) -> tuple[Arc, int] | None:
        e = self.out_index[u].max_entry()
        return None if e is None else (e.owner, e.group.label)

    # -- copies and flips --------------------------------------------------

    def arc(self, tail: int, head: int) -> Arc | None:
        rec = self.records.get(_pair(tail, head))
        return None if rec is None else rec.direction(tail, head)

    def _add_copy(self, tail: int, head: int) -> bool:
        key = _pair(tail, head)
        rec = self.records.get(key)
        if rec is None:
            rec = self.records[key] = ArcRecord(*key)
            self.counters.records_allocated += 1
        arc = rec.direction(tail, head)
        if arc.count:
            self._detach(arc)
        arc.count += 1
        changed = self._inc(head)
        self._attach(arc)
        return changed

    def _remove_copy(self, arc: Arc) -> bool:
        arc.count -= 1
        if arc.count == 0:
            self._detach(arc)
            arc.lab_tail = arc.lab_head = None
        changed = self._dec(arc.head)
        rec = arc.record
        if rec.multiplicity == 0:
            del self.records[(rec.u, rec.v)]
        return changed

    def flip(self, arc: Arc) -> tuple[bool, bool]:
        """Move one copy of ``u -> v`` to ``v -> u`` and relabel the new direction.

        Returns whether the key degrees of (u, v) changed.
        """
        if arc.count < 1:
            raise InternalError(f"flip of empty direction {arc.tail}->{arc.head}")
        u, v = arc.tail, arc.head
        if self.on_flip is not None:
            self.on_flip(u, v, self.key(u), self.key(v))
        arc.count -= 1
        if arc.count == 0:
            self._detach(arc)
            arc.lab_tail = arc.lab_head = None
        v_changed = self._dec(v)
        u_changed = self._inc(u)
        rev = arc.record.reverse(arc)
        if rev.count:
            self._detach(rev)
        rev.count += 1
        self._attach(rev)
        self.counters.flips += 1
        return u_changed, v_changed

    # -- public updates ----------------------------------------------------

    def _check_vertex(self, v) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range [0, {self.n})")

    def insert(self, u: int, v: int, copies: int = 1) -> None:
        """Add ``copies`` copies of edge {u, v}, one update each.

        Each copy is headed at the endpoint of smaller key (ties: smaller id).
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {u} rejected")
        key = self.key
        for _ in range(copies):
            ku, kv = key(u), key(v)
            if ku < kv or (ku == kv and u < v):
                head, tail = u, v
            else:
                head, tail = v, u
            self._begin_op()
            if self._add_copy(tail, head):
                self._check_inc(head)
            self._end_op()

    def delete(self, u: int, v: int, copies: int = 1) -> None:
        """Remove ``copies`` copies of edge {u, v}, one update each.

        With both directions present the copy leaves the heavier head.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        pair = _pair(u, v)
        rec = self.records.get(pair) if u != v else None
        if rec is None or rec.multiplicity < copies:
            raise GraphError(f"edge {{{u}, {v}}} not present")
        key = self.key
        for _ in range(copies):
            a, b = rec.fwd, rec.bwd
            if a.count and b.count:
                ka, kb = key(a.head), key(b.head)
                arc = a if ka > kb or (ka == kb and a.head < b.head) else b
            else:
                arc = a if a.count else b
            head = arc.head
            self._begin_op()
            if self._remove_copy(arc):
                self._check_dec(head)
            self._end_op()

    def multiplicity(self, u: int, v: int) -> int:
        rec = self.records.get(_pair(u, v))
        return 0 if rec is None else rec.multiplicity

    @property
    def edge_count(self) -> int:
        return sum(r.multiplicity for r in self.records.values())

    def arcs(self):
        """Live directions (positive count)."""
        for rec in self.records.values():
            if rec.fwd.count:
                yield rec.fwd
            if rec.bwd.count:
                yield rec.bwd

    def orientation(self) -> dict[tuple[int, int], int]:
        return {(a.tail, a.head): a.count for a in self.arcs()}

    # -- repair hooks and op accounting ------------------------------------

    def _check_inc(self, v: int) -> None:
        pass

    def _check_dec(self, u: int) -> None:
        pass

    def _begin_op(self) -> None:
        c = self.counters
        c.op_iterations = 0
        c.op_calls = 0

    def _end_op(self) -> None:
        c = self.counters
        c.ops += 1
        if c.op_iterations > c.max_op_iterations:
            c.max_op_iterations = c.op_iterations
        if c.op_calls > c.max_depth:
            c.max_depth = c.op_calls


def new_structure(n: int, config: Config | None = None) -> Structure:
    """Empty, repair-free orientation over ``n`` vertices."""
    if config is None:
        config = Config(n)
    elif config.n != n:
        raise ConfigError(f"config is for n={config.n}, structure requested n={n}")
    return Structure(config)
