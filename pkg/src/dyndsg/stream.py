"""Update-stream text format and the event loop that drives an estimator.

Format::

    dsg <n> [rank <r>]
    + u v [w ...]     insert
    - u v [w ...]     delete (one copy with that endpoint set)
    qv                density value query
    qs                densest subgraph query

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .config import Config
from .core import GraphError
from .fractional import DensityEstimator
from .hypergraph import HyperDensityEstimator, hyper_violations
from .invariants import violations
from .oracle import exact_density_bruteforce, exact_density_flow, exact_hyper_density
from .verify import additive_slack, bracket_errors

RUN_MODES = ("amortized", "worstcase", "combined", "hypergraph")
EVENT_KINDS = ("insert", "delete", "query_value", "query_subgraph")


class StreamError(ValueError):
    """Malformed stream text or an update the maintainer rejected."""


@dataclass(frozen=True)
class UpdateEvent:
    kind: str
    payload: tuple[int, ...] = ()
    line: int = 0


@dataclass(frozen=True)
class Stream:
    n: int
    rank: int | None
    events: tuple[UpdateEvent, ...]

    @property
    def is_hyper(self) -> bool:
        return self.rank is not None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise StreamError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_stream(text: str) -> Stream:
    n = rank = None
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if toks[0] != "dsg" or len(toks) not in (2, 4) or (len(toks) == 4 and toks[2] != "rank"):
                raise StreamError(f"line {lineno}: expected header 'dsg <n> [rank <r>]'")
            n = _int(toks[1], lineno)
            if n < 1:
                raise StreamError(f"line {lineno}: vertex count must be positive")
            if len(toks) == 4:
                rank = _int(toks[3], lineno)
                if rank < 2:
                    raise StreamError(f"line {lineno}: rank must be at least 2")
            continue
        op = toks[0]
        if op in ("qv", "qs"):
            if len(toks) != 1:
                raise StreamError(f"line {lineno}: query takes no arguments")
            events.append(UpdateEvent("query_value" if op == "qv" else "query_subgraph", (), lineno))
            continue
        if op not in ("+", "-"):
            raise StreamError(f"line {lineno}: unknown event {op!r}")
        ids = tuple(_int(t, lineno) for t in toks[1:])
        limit = rank or 2
        if not 2 <= len(ids) <= limit:
            raise StreamError(f"line {lineno}: expected 2..{limit} endpoints, got {len(ids)}")
        for x in ids:
            if not 0 <= x < n:
                raise StreamError(f"line {lineno}: vertex {x} out of range [0, {n})")
        if len(set(ids)) != len(ids):
            raise StreamError(f"line {lineno}: repeated endpoint")
        events.append(UpdateEvent("insert" if op == "+" else "delete", ids, lineno))
    if n is None:
        raise StreamError("line 1: missing header 'dsg <n> [rank <r>]'")
    return Stream(n, rank, tuple(events))


@dataclass
class RunReport:
    config: dict
    answers: list = field(default_factory=list)
    densities: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    wall_time: float = 0.0

    def output_lines(self) -> list[str]:
        out = []
        for kind, ans in self.answers:
            if kind == "value":
                out.append(f"value {ans.numerator}/{ans.denominator}")
            else:
                out.append(" ".join(["subgraph", *map(str, ans)]))
        return out

    def metrics(self) -> dict:
        return {
            **self.counters,
            "config": self.config,
            "subgraph_densities": [f"{d.numerator}/{d.denominator}" for d in self.densities],
            "violations": len(self.violations),
            "wall_time": round(self.wall_time, 6),
        }

    def comparable(self) -> dict:
        """Everything except timing; equal across repeated runs."""
        m = self.metrics()
        m.pop("wall_time")
        return {"answers": self.output_lines(), "metrics": m}


def _config_echo(est, mode: str) -> dict:
    c = est.config
    echo = {k: str(v) if isinstance(v, Fraction) else v for k, v in asdict(c).items()}
    echo["mode"] = mode
    echo["budget"] = c.budget
    if est.T is not None:
        echo["truncation_threshold"] = est.T
        echo["truncation_cap"] = est.dup.threshold
    return echo


def _aggregate(structs) -> dict:
    cs = [s.counters for s in structs]
    out = {
        "arc_iterations": sum(c.arcs_processed for c in cs),
        "flips": sum(c.flips for c in cs),
        "label_resets": sum(c.label_resets for c in cs),
        "check_calls": sum(c.calls for c in cs),
        "max_op_iterations": max(c.max_op_iterations for c in cs),
        "max_depth": max(c.max_depth for c in cs),
        "records_allocated": sum(c.records_allocated for c in cs),
    }
    scans = [getattr(s, "endpoint_scans", None) for s in structs]
    if scans[0] is not None:
        out["endpoint_scans"] = sum(scans)
    return out


def build_estimator(stream: Stream, mode: str, config: Config | None):
    if mode not in RUN_MODES:
        raise ValueError(f"mode must be one of {RUN_MODES}")
    if mode == "hypergraph":
        cfg = config or Config(stream.n, rank=stream.rank or 2)
        return HyperDensityEstimator(stream.n, cfg, mode="worstcase")
    if stream.rank is not None and stream.rank > 2:
        raise ValueError(f"mode {mode} needs a graph stream, header declares rank {stream.rank}")
    return DensityEstimator(stream.n, config or Config(stream.n), mode=mode)


def _oracle(est, hyper: bool) -> Fraction:
    edges = est.edge_list()
    if hyper:
        return exact_hyper_density(est.n, edges).opt_density
    if est.n <= 16:
        return exact_density_bruteforce(est.n, edges).opt_density
    return exact_density_flow(est.n, edges).opt_density


def run(stream: Stream, mode: str = "combined", config: Config | None = None, verify: bool = False) -> RunReport:
    """Apply events in order. Maintainer rejections raise :class:`StreamError`."""
    est = build_estimator(stream, mode, config)
    hyper = mode == "hypergraph"
    report = RunReport(config=_config_echo(est, mode))
    eps = est.config.eps
    slack = additive_slack(est.n, eps, est.k)
    start = time.perf_counter()
    for idx, ev in enumerate(stream.events):
        try:
            if ev.kind == "insert":
                if hyper:
                    est.insert_hyperedge(ev.payload)
                else:
                    est.insert_edge(*ev.payload)
            elif ev.kind == "delete":
                if hyper:
                    est.delete_hyperedge(est.find(ev.payload))
                else:
                    est.delete_edge(*ev.payload)
            else:
                value = est.density_value()
                sub = est.densest_subgraph()
                found = est.subgraph_density(sub) if sub else Fraction(0)
                if ev.kind == "query_value":
                    report.answers.append(("value", value))
                else:
                    report.answers.append(("subgraph", sub))
                    report.densities.append(found)
                if verify:
                    opt = _oracle(est, hyper)
                    report.violations += [
                        f"event {idx} (line {ev.line}): {e}"
                        for e in bracket_errors(opt, value, found, eps, slack)
                    ]
        except GraphError as exc:
            raise StreamError(f"event {idx} (line {ev.line}): {exc}") from None
        if verify and ev.kind in ("insert", "delete"):
            for s in est.structures:
                errs = hyper_violations(s) if hyper else violations(s)
                report.violations += [f"event {idx} (line {ev.line}): {e}" for e in errs]
    report.wall_time = time.perf_counter() - start
    report.counters = {"events": len(stream.events), "queries": len(report.answers), **_aggregate(est.structures)}
    return report
