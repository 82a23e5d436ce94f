"""Acceptance criteria, each at its stated tolerance.

Every test prints one ``PASS``/``FAIL`` line. Run directly with
``python tests/test_acceptance.py`` or through pytest (lines appear in the
pytest output since capture is bypassed for them).
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from dyndsg import (
    AmortizedMaintainer,
    Config,
    DensityEstimator,
    HyperDensityEstimator,
    HyperMaintainer,
    ThresholdMaintainer,
    WorstCaseMaintainer,
    hyper_violations,
    violations,
)
from dyndsg.oracle import (
    exact_density_bruteforce,
    exact_density_flow,
    exact_hyper_density,
    exact_minmax_orientation,
)
from dyndsg.verify import additive_slack, bracket_errors
from dyndsg.workloads import adversarial_multigraph, random_graph_events, random_hyper_events

sys.path.insert(0, str(Path(__file__).resolve().parent))
from conftest import HyperDriver, apply_graph  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "tests" / "data" / "corpus"
EPS = Fraction(1, 4)
AMORTIZED_CONSTANT = 8  # total iterations <= 8 * M / alpha


def emit(capsys, number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def graph_streams(count=1000, seed=0):
    for i in range(count):
        rng = random.Random(seed * 100003 + i)
        n = rng.randint(2, 12)
        yield n, random_graph_events(rng, n, rng.randint(1, 60))


def run_bracket_streams(mode, count=1000, check_invariants=True):
    queries = bracket_bad = inv_bad = 0
    first = None
    for idx, (n, events) in enumerate(graph_streams(count)):
        est = DensityEstimator(n, Config(n, eps=EPS), mode=mode)
        slack = additive_slack(n, EPS, est.k)
        edges = []
        for op, e in events:
            if op == "qv":
                queries += 1
                opt = exact_density_bruteforce(n, edges).opt_density
                sub = est.densest_subgraph()
                found = est.subgraph_density(sub) if sub else Fraction(0)
                errs = bracket_errors(opt, est.density_value(), found, EPS, slack)
                if errs:
                    bracket_bad += 1
                    first = first or f"stream {idx}: {errs[0]}"
                continue
            apply_graph(est, op, e)
            if op == "+":
                edges.append(e)
            else:
                edges.remove(e)
            if check_invariants:
                for s in est.structures:
                    errs = violations(s)
                    if errs:
                        inv_bad += 1
                        first = first or f"stream {idx}: {errs[0]}"
    return queries, bracket_bad, inv_bad, first


def test_criterion_1_oracle_bracket(capsys):
    """Default (combined) mode; invariants are audited in the same pass."""
    start = time.perf_counter()
    queries, bad, inv_bad, first = run_bracket_streams("combined")
    elapsed = time.perf_counter() - start
    ok = bad == 0 and inv_bad == 0 and elapsed < 120
    emit(capsys, 1, ok, f"1000 streams, {queries} queries, {bad} bracket violations, "
         f"{inv_bad} invariant violations, {elapsed:.1f}s" + (f"; first: {first}" if first else ""))
    assert bad == 0 and inv_bad == 0, first
    assert elapsed < 120


@pytest.mark.parametrize("mode", ["amortized", "worstcase"])
def test_criterion_2_invariants_every_event(capsys, mode):
    queries, bad, inv_bad, first = run_bracket_streams(mode)
    ok = bad == 0 and inv_bad == 0
    emit(capsys, 2, ok, f"{mode}: invariants after every event of the 1000 streams, "
         f"{inv_bad} violations ({bad} bracket violations)" + (f"; first: {first}" if first else ""))
    assert ok, first


def test_criterion_3_worstcase_iteration_bound(capsys):
    alpha = Fraction(1, 8)
    events = adversarial_multigraph(length=5000)
    start = time.perf_counter()
    results = {}
    for name, s in (
        ("worstcase", WorstCaseMaintainer(Config(12, alpha=alpha, budget_c=4))),
        ("truncated T=16", ThresholdMaintainer(Config(12, alpha=alpha, budget_c=4), threshold=16)),
    ):
        worst, bad = Fraction(0), 0
        for op, e in events:
            before = s.max_key
            apply_graph(s, op, e)
            bound = s.iteration_bound(max(before, s.max_key))
            its = s.counters.op_iterations
            bad += its > bound
            worst = max(worst, Fraction(its, bound))
        results[name] = (bad, worst, s.max_deg)
    elapsed = time.perf_counter() - start
    ok = all(b == 0 for b, _, _ in results.values()) and elapsed < 10
    detail = "; ".join(f"{k}: {b} over bound, peak ratio {float(w):.3f}, max in-degree {m}"
                       for k, (b, w, m) in results.items())
    emit(capsys, 3, ok, f"5000 events, {detail}, {elapsed:.2f}s")
    assert ok


def test_criterion_4_amortized_total(capsys):
    alpha = Fraction(1, 8)
    events = adversarial_multigraph(length=5000)
    s = AmortizedMaintainer(Config(12, alpha=alpha, budget_c=4))
    for op, e in events:
        apply_graph(s, op, e)
    total = s.counters.arcs_processed
    limit = AMORTIZED_CONSTANT * len(events) / alpha
    ok = total <= limit
    emit(capsys, 4, ok, f"total iterations {total} <= {AMORTIZED_CONSTANT}*M/alpha = {limit}")
    assert ok


def test_criterion_5_space_independent_of_k(capsys):
    rng = random.Random(55)
    n = 30
    edges = [tuple(rng.sample(range(n), 2)) for _ in range(200)]
    drop = rng.sample(range(200), 60)
    seen = {}
    for mode in ("amortized", "worstcase", "combined"):
        for k in (8, 64, 256):
            est = DensityEstimator(n, Config(n, dup_k=k), mode=mode)
            for e in edges:
                est.insert_edge(*e)
            for i in drop:
                est.delete_edge(*edges[i])
            seen[mode, k] = (est.records_allocated, est.arc_records)
    ok = all(len({seen[m, k] for k in (8, 64, 256)}) == 1 for m in ("amortized", "worstcase", "combined"))
    emit(capsys, 5, ok, "arc records (allocated, live) per k: "
         + ", ".join(f"{m} {seen[m, 8]}" for m in ("amortized", "worstcase", "combined")))
    assert ok


def test_criterion_6_truncation(capsys):
    conditional_checks = conditional_bad = rejections = rejection_bad = 0
    for seed in range(200):
        rng = random.Random(600 + seed)
        n = rng.randint(3, 9)
        T = rng.choice([1, 2, 3])
        cfg = Config(n, eps=EPS, threshold_t=T)
        est = DensityEstimator(n, cfg, mode="combined")
        trunc = ThresholdMaintainer(cfg, threshold=est.k * T)
        slack = additive_slack(n, EPS, est.k)
        edges, trace = [], []
        for step in range(70):
            if edges and rng.random() < (0.2 if step < 40 else 0.7):
                e = edges.pop(rng.randrange(len(edges)))
                est.delete_edge(*e)
                trunc.delete(*e, copies=est.k)
            else:
                e = tuple(rng.sample(range(n), 2))
                edges.append(e)
                est.insert_edge(*e)
                trunc.insert(*e, copies=est.k)
            opt = exact_density_bruteforce(n, edges).opt_density
            trace.append((opt, Fraction(trunc.max_key, est.k)))
            if not est.truncated_accepted():
                rejections += 1
                rejection_bad += opt < T
        if all(opt <= T for opt, _ in trace):
            for opt, mu in trace:
                conditional_checks += 1
                conditional_bad += mu > (1 + EPS) * opt + slack
    ok = conditional_bad == 0 and rejection_bad == 0 and conditional_checks > 0 and rejections > 0
    emit(capsys, 6, ok, f"{conditional_checks} steps on OPT<=T streams, {conditional_bad} above bracket; "
         f"{rejections} rejections, {rejection_bad} with OPT<T")
    assert ok


def test_criterion_7_hypergraph(capsys):
    queries = bad = inv_bad = 0
    first = None
    start = time.perf_counter()
    for i in range(1000):
        rng = random.Random(7000 + i)
        n = rng.randint(3, 10)
        est = HyperDensityEstimator(n, Config(n, eps=EPS, rank=3))
        slack = additive_slack(n, EPS, est.k)
        drv = HyperDriver(est)
        edges = []
        for op, e in random_hyper_events(rng, n, rng.randint(1, 40)):
            if op == "qv":
                queries += 1
                opt = exact_hyper_density(n, edges).opt_density
                sub = est.hyper_densest_subgraph()
                found = est.subgraph_density(sub) if sub else Fraction(0)
                errs = bracket_errors(opt, est.hyper_density_value(), found, EPS, slack)
                if errs:
                    bad += 1
                    first = first or f"stream {i}: {errs[0]}"
                continue
            drv.apply(op, e)
            if op == "+":
                edges.append(e)
            else:
                edges.remove(e)
            errs = hyper_violations(est.dup)
            if errs:
                inv_bad += 1
                first = first or f"stream {i}: {errs[0]}"
    # r = 2: trace equality with the graph maintainer, parallel edges included
    trace_bad = 0
    for i in range(200):
        rng = random.Random(7700 + i)
        n = rng.randint(2, 10)
        cfg = Config(n, alpha=rng.choice([Fraction(1, 2), Fraction(1, 8), Fraction(1, 32)]))
        h, g = HyperMaintainer(cfg), WorstCaseMaintainer(cfg)
        h.trace, g.trace = [], []
        drv = HyperDriver(h)
        for op, e in random_graph_events(rng, n, 150, p_query=0):
            drv.apply(op, e)
            apply_graph(g, op, e)
            trace_bad += h.degrees.indeg != g.degrees.indeg or h.max_deg != g.max_deg
        trace_bad += h.trace != g.trace
    elapsed = time.perf_counter() - start
    ok = bad == inv_bad == trace_bad == 0
    emit(capsys, 7, ok, f"1000 rank-3 streams, {queries} queries, {bad} bracket and {inv_bad} invariant "
         f"violations; r=2 trace mismatches {trace_bad} over 200 streams; {elapsed:.1f}s"
         + (f"; first: {first}" if first else ""))
    assert ok, first


def test_criterion_8_oracle_consistency(capsys):
    rng = random.Random(8)
    mismatch = sandwich_bad = 0
    for _ in range(500):
        n = rng.randint(2, 12)
        m = rng.randint(0, 40)
        edges = [tuple(rng.sample(range(n), 2)) for _ in range(m)]
        a = exact_density_bruteforce(n, edges).opt_density
        b = exact_density_flow(n, edges).opt_density
        mismatch += a != b
        arb = exact_minmax_orientation(n, edges, method="flow")
        sandwich_bad += not (a <= arb <= a + 1)
    ok = mismatch == sandwich_bad == 0
    emit(capsys, 8, ok, f"500 graphs, flow/brute-force mismatches {mismatch}, sandwich violations {sandwich_bad}")
    assert ok


def _cli(path, *flags):
    proc = subprocess.run(
        [sys.executable, "-m", "dyndsg", str(path), *flags], capture_output=True, text=True
    )
    lines = proc.stdout.splitlines()
    metrics = json.loads(lines[-1].removeprefix("metrics ")) if lines else {}
    metrics.pop("wall_time", None)
    return proc.returncode, lines[:-1], metrics, proc.stderr


def test_criterion_9_cli_corpus(capsys):
    sys.path.insert(0, str(ROOT / "scripts"))
    from make_corpus import corpus

    files = sorted(CORPUS.glob("*.dsg"))
    expected = dict(corpus())
    stale = [f.name for f in files if expected.get(f.name) != f.read_text()]
    nondeterministic, unclean = [], []
    for f in files:
        first = _cli(f, "--verify")
        second = _cli(f, "--verify")
        if first[:3] != second[:3]:
            nondeterministic.append(f.name)
        if first[0] != 0 or first[2].get("violations"):
            unclean.append(f"{f.name} (exit {first[0]}: {first[3].strip()[:120]})")
    ok = len(files) == 20 and not stale and not nondeterministic and not unclean
    emit(capsys, 9, ok, f"{len(files)} streams, {len(nondeterministic)} nondeterministic, "
         f"{len(unclean)} verify failures, {len(stale)} differ from generator")
    assert ok, (stale, nondeterministic, unclean)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
