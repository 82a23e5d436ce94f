"""Per-update cost of each maintainer on the adversarial multigraph stream.

Prints one row per (structure, alpha): total and peak loop iterations,
flips, the peak ratio against the per-update bound, and wall time.
"""

import argparse
import time
from fractions import Fraction

from dyndsg import AmortizedMaintainer, Config, ThresholdMaintainer, WorstCaseMaintainer
from dyndsg.workloads import adversarial_multigraph


def measure(factory, events):
    s = factory()
    start = time.perf_counter()
    peak = None if isinstance(s, AmortizedMaintainer) else 0.0
    for op, (u, v) in events:
        before = s.max_key
        (s.insert if op == "+" else s.delete)(u, v)
        if peak is not None:
            peak = max(peak, s.counters.op_iterations / s.iteration_bound(max(before, s.max_key)))
    c = s.counters
    return {
        "iterations": c.arcs_processed,
        "peak_op": c.max_op_iterations,
        "flips": c.flips,
        "depth": c.max_depth,
        "max_deg": s.max_deg,
        "bound_ratio": peak,
        "seconds": time.perf_counter() - start,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--events", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threshold", type=int, default=16)
    args = ap.parse_args(argv)
    events = adversarial_multigraph(seed=args.seed, length=args.events)
    print(f"{'structure':<12} {'alpha':>6} {'iters':>8} {'peak':>5} {'flips':>7} {'depth':>5} "
          f"{'maxdeg':>6} {'ratio':>6} {'sec':>6}")
    for alpha in (Fraction(1, 4), Fraction(1, 8), Fraction(1, 16), Fraction(1, 32)):
        cfg = Config(12, alpha=alpha)
        for name, factory in (
            ("amortized", lambda: AmortizedMaintainer(cfg)),
            ("worstcase", lambda: WorstCaseMaintainer(cfg)),
            (f"trunc T={args.threshold}", lambda: ThresholdMaintainer(cfg, threshold=args.threshold)),
        ):
            r = measure(factory, events)
            print(f"{name:<12} {str(alpha):>6} {r['iterations']:>8} {r['peak_op']:>5} {r['flips']:>7} "
                  f"{r['depth']:>5} {r['max_deg']:>6} {'-' if r['bound_ratio'] is None else format(r['bound_ratio'], '.3f'):>6} {r['seconds']:>6.2f}")


if __name__ == "__main__":
    main()
