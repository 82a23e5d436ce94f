"""Constant-time bookkeeping: the per-vertex label index and the degree table.

A :class:`LabelList` holds the arcs of one cut of one vertex, grouped by the
label that vertex recorded for them. Groups form a doubly linked list in
increasing label order; each group is itself a doubly linked list of
entries. New labels are always the owner's current key degree, and a cursor
marks the first group whose label is >= that key, so insertion, removal,
min/max lookup and a +-1 move of the key are all O(1).
"""

from __future__ import annotations

from typing import Iterator


class Entry:
    """Intrusive list node; ``owner`` is the arc (or hyperedge incidence)."""

    __slots__ = ("owner", "group", "prev", "next")

    def __init__(self, owner) -> None:
        self.owner = owner
        self.group: _Group | None = None
        self.prev: Entry | None = None
        self.next: Entry | None = None

    @property
    def label(self) -> int | None:
        return None if self.group is None else self.group.label


class _Group:
    __slots__ = ("label", "first", "last", "size", "prev", "next")

    def __init__(self, label) -> None:
        self.label = label
        self.first: Entry | None = None
        self.last: Entry | None = None
        self.size = 0
        self.prev: _Group | None = None
        self.next: _Group | None = None


class LabelList:
    __slots__ = ("_head", "_tail", "cursor", "size")

    def __init__(self) -> None:
        self._head = _Group(None)
        self._tail = _Group(None)
        self._head.next = self._tail
        self._tail.prev = self._head
        self.cursor = self._tail
        self.size = 0

    def push(self, entry: Entry, key: int) -> None:
        """Append ``entry`` under label ``key``, which must be the current key."""
        g = self.cursor
        if g is self._tail or g.label != key:
            new = _Group(key)
            prev = g.prev
            new.prev = prev
            new.next = g
            prev.next = new
            g.prev = new
            g = new
            self.cursor = new
        entry.group = g
        entry.next = None
        last = g.last
        entry.prev = last
        if last is None:
            g.first = entry
        else:
            last.next = entry
        g.last = entry
        g.size += 1
        self.size += 1

    def remove(self, entry: Entry) -> None:
        g = entry.group
        p, q = entry.prev, entry.next
        if p is None:
            g.first = q
        else:
            p.next = q
        if q is None:
            g.last = p
        else:
            q.prev = p
        entry.group = entry.prev = entry.next = None
        g.size -= 1
        self.size -= 1
        if g.size == 0:
            if self.cursor is g:
                self.cursor = g.next
            g.prev.next = g.next
            g.next.prev = g.prev

    def key_up(self, old: int) -> None:
        """The owner's key moved from ``old`` to ``old + 1``."""
        c = self.cursor
        if c is not self._tail and c.label == old:
            self.cursor = c.next

    def key_down(self, new: int) -> None:
        """The owner's key moved from ``new + 1`` to ``new``."""
        p = self.cursor.prev
        if p is not self._head and p.label == new:
            self.cursor = p

    def min_entry(self) -> Entry | None:
        g = self._head.next
        return None if g is self._tail else g.first

    def max_entry(self) -> Entry | None:
        g = self._tail.prev
        return None if g is self._head else g.first

    def __len__(self) -> int:
        return self.size

    def groups(self) -> Iterator[tuple[int, list[Entry]]]:
        g = self._head.next
        while g is not self._tail:
            items = []
            e = g.first
            while e is not None:
                items.append(e)
                e = e.next
            yield g.label, items
            g = g.next

    def entries(self) -> Iterator[Entry]:
        for _, items in self.groups():
            yield from items

    def cursor_label(self) -> int | None:
        return None if self.cursor is self._tail else self.cursor.label

    def check(self, key: int) -> list[str]:
        """Structural audit against the owner's current key; empty means sound."""
        errs = []
        labels = []
        g = self._head.next
        count = 0
        while g is not self._tail:
            if g.size == 0:
                errs.append(f"empty group {g.label}")
            seen = 0
            e = g.first
            prev = None
            while e is not None:
                if e.group is not g or e.prev is not prev:
                    errs.append(f"broken links in group {g.label}")
                    break
                seen += 1
                prev, e = e, e.next
            if g.last is not prev:
                errs.append(f"stale tail pointer in group {g.label}")
            if seen != g.size:
                errs.append(f"group {g.label} size {g.size} != {seen}")
            count += seen
            labels.append(g.label)
            g = g.next
        if any(a >= b for a, b in zip(labels, labels[1:])):
            errs.append(f"labels not strictly increasing: {labels}")
        if count != self.size:
            errs.append(f"size {self.size} != {count}")
        expect = next((lab for lab in labels if lab >= key), None)
        if self.cursor_label() != expect:
            errs.append(f"cursor at {self.cursor_label()}, expected {expect} for key {key}")
        return errs


class DegreeTable:
    """In-degrees with bucket counts; O(1) max in-degree under +-1 updates."""

    __slots__ = ("indeg", "buckets", "max_deg")

    def __init__(self, n: int) -> None:
        self.indeg = [0] * n
        self.buckets = [n] + [0] * 7
        self.max_deg = 0

    def inc(self, v: int) -> int:
        d = self.indeg[v]
        b = self.buckets
        b[d] -= 1
        d += 1
        if d == len(b):
            b.extend([0] * len(b))
        b[d] += 1
        self.indeg[v] = d
        if d > self.max_deg:
            self.max_deg = d
        return d

    def dec(self, v: int) -> int:
        d = self.indeg[v]
        b = self.buckets
        b[d] -= 1
        d -= 1
        b[d] += 1
        self.indeg[v] = d
        if b[self.max_deg] == 0:
            self.max_deg -= 1
        return d

    def check(self) -> list[str]:
        errs = []
        counts = [0] * len(self.buckets)
        for d in self.indeg:
            counts[d] += 1
        if counts != self.buckets:
            errs.append("bucket counts out of sync with in-degrees")
        if self.max_deg != max(self.indeg, default=0):
            errs.append(f"max_deg {self.max_deg} != {max(self.indeg, default=0)}")
        return errs
