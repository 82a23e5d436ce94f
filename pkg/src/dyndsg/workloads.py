"""Seeded update-stream generators shared by tests, scripts and the corpus."""

from __future__ import annotations

import random

from .stream import Stream, UpdateEvent


def random_graph_events(rng: random.Random, n: int, length: int, p_delete=0.3, p_query=0.15):
    """Mixed insert/delete/query stream over a multigraph on ``n`` vertices.

    Returns a list of ``(kind, payload)`` with kinds ``+``, ``-``, ``qv``.
    Deletes always target a live edge.
    """
    live: list[tuple[int, int]] = []
    out = []
    for _ in range(length):
        r = rng.random()
        if live and r < p_delete:
            out.append(("-", live.pop(rng.randrange(len(live)))))
        elif r < 1 - p_query:
            e = tuple(rng.sample(range(n), 2))
            live.append(e)
            out.append(("+", e))
        else:
            out.append(("qv", ()))
    return out


def random_hyper_events(rng: random.Random, n: int, length: int, rank: int = 3, p_delete=0.3, p_query=0.15):
    """Like :func:`random_graph_events` with hyperedges of 2..rank endpoints."""
    live: list[tuple[int, ...]] = []
    out = []
    for _ in range(length):
        r = rng.random()
        if live and r < p_delete:
            out.append(("-", live.pop(rng.randrange(len(live)))))
        elif r < 1 - p_query:
            e = tuple(rng.sample(range(n), rng.randint(2, min(rank, n))))
            live.append(e)
            out.append(("+", e))
        else:
            out.append(("qv", ()))
    return out


def adversarial_multigraph(seed: int = 0, length: int = 5000, n: int = 12, core: int = 5):
    """Insert/delete stream built to provoke long repair cascades.

    Parallel copies pile onto pairs inside a small core, so degrees grow
    well past the vertex count; deletions alternate between undoing the
    newest edge (reversing the most recent cascade) and random removals.
    Returns a list of ``(op, (u, v))`` with op ``+`` or ``-``.
    """
    rng = random.Random(seed)
    live: list[tuple[int, int]] = []
    out = []
    phase_len = 400
    for step in range(length):
        building = (step // phase_len) % 2 == 0
        r = rng.random()
        if live and (r < (0.25 if building else 0.6)):
            if rng.random() < 0.5:
                e = live.pop()
            else:
                e = live.pop(rng.randrange(len(live)))
            out.append(("-", e))
            continue
        if rng.random() < 0.7:
            e = tuple(rng.sample(range(core), 2))
        else:
            e = (rng.randrange(core), rng.randrange(core, n))
        live.append(e)
        out.append(("+", e))
    return out


def to_stream(n: int, events, rank: int | None = None) -> Stream:
    kinds = {"+": "insert", "-": "delete", "qv": "query_value", "qs": "query_subgraph"}
    evs = tuple(UpdateEvent(kinds[op], tuple(p), i + 2) for i, (op, p) in enumerate(events))
    return Stream(n, rank, evs)


def format_stream(n: int, events, rank: int | None = None) -> str:
    lines = [f"dsg {n}" + (f" rank {rank}" if rank is not None else "")]
    for op, payload in events:
        lines.append(" ".join([op, *map(str, payload)]))
    return "\n".join(lines) + "\n"
