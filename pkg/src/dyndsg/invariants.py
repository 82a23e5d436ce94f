"""Full-scan audits of a structure. Each returns a list of violation strings.

All inequalities are evaluated with integer cross-multiplication against
``alpha = p / q``.
"""

from __future__ import annotations

from .core import Structure


def audit_structure(s: Structure) -> list[str]:
    """Degree table, label index and record consistency."""
    errs = list(s.degrees.check())
    indeg = [0] * s.n
    want_in = [set() for _ in range(s.n)]
    want_out = [set() for _ in range(s.n)]
    for (u, v), rec in s.records.items():
        if rec.multiplicity == 0:
            errs.append(f"dead record {u},{v} kept")
        for arc in (rec.fwd, rec.bwd):
            if arc.count < 0:
                errs.append(f"negative count on {arc}")
            if arc.count:
                indeg[arc.head] += arc.count
                want_in[arc.head].add(id(arc))
                want_out[arc.tail].add(id(arc))
                if arc.in_entry.label != arc.lab_head or arc.out_entry.label != arc.lab_tail:
                    errs.append(f"index label mismatch on {arc}")
            elif arc.lab_head is not None or arc.in_entry.group is not None:
                errs.append(f"empty direction still labelled: {arc}")
    if indeg != s.degrees.indeg:
        errs.append("in-degrees disagree with arc counts")
    for v in range(s.n):
        key = s.key(v)
        for name, lst, want in (
            ("in", s.in_index[v], want_in[v]),
            ("out", s.out_index[v], want_out[v]),
        ):
            errs.extend(f"{name}-index of {v}: {msg}" for msg in lst.check(key))
            got = [id(e.owner) for e in lst.entries()]
            if len(got) != len(set(got)) or set(got) != want:
                errs.append(f"{name}-index of {v} does not match live arcs")
    return errs


def amortized_violations(s: Structure) -> list[str]:
    """Label relations and local optimality kept by the amortized maintainer."""
    p, q = s._ap, s._aq
    qp = q + p
    errs = []
    for a in s.arcs():
        du, dv = s.key(a.tail), s.key(a.head)
        lu, lv = a.lab_tail, a.lab_head
        if lu < lv - 1:
            errs.append(f"order: {a}")
        if q * dv > qp * lv + q:
            errs.append(f"head: {a} indeg={dv}")
        if q * lu > qp * (du + 1):
            errs.append(f"tail: {a} indeg={du}")
        # indeg(v) <= (1+a)^2 indeg(u) + 3 + 3a
        if q * q * dv > qp * qp * du + 3 * q * q + 3 * p * q:
            errs.append(f"local: {a} degrees=({du}, {dv})")
    return errs


def worstcase_violations(s: Structure) -> list[str]:
    """Label relations and local optimality kept by the budgeted maintainers.

    Uses key degrees, so truncated structures are audited against the
    truncated relations.
    """
    p, q = s._ap, s._aq
    qp = q + p
    q3 = q * q * q
    errs = []
    t = s.threshold
    for a in s.arcs():
        du, dv = s.key(a.tail), s.key(a.head)
        lu, lv = a.lab_tail, a.lab_head
        if q * lv > qp * (lu + 1):
            errs.append(f"order: {a}")
        if q * dv > qp * (lv + 1):
            errs.append(f"head: {a} key={dv}")
        if q * lu > qp * (du + 1):
            errs.append(f"tail: {a} key={du}")
        # key(v) <= (1+a)^3 key(u) + 3 + 10a
        if q3 * dv > qp * qp * qp * du + 3 * q3 + 10 * p * q * q:
            errs.append(f"local: {a} keys=({du}, {dv})")
        if t is not None and (lu > t or lv > t):
            errs.append(f"label above threshold: {a}")
    return errs


def violations(s: Structure) -> list[str]:
    """Structural audit plus the relation set matching the maintainer type."""
    from .amortized import AmortizedMaintainer
    from .worstcase import WorstCaseMaintainer

    errs = audit_structure(s)
    if isinstance(s, AmortizedMaintainer):
        errs += amortized_violations(s)
    elif isinstance(s, WorstCaseMaintainer):
        errs += worstcase_violations(s)
    return errs
