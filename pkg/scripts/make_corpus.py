"""Write the seeded stream corpus used by the CLI acceptance check."""

import argparse
import random
from pathlib import Path

from dyndsg.workloads import format_stream, random_graph_events, random_hyper_events

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "corpus"


def corpus(count: int = 20, seed: int = 2024):
    rng = random.Random(seed)
    for i in range(count):
        hyper = i % 4 == 3
        n = rng.randint(4, 12 if not hyper else 10)
        length = rng.randint(20, 60 if not hyper else 40)
        if hyper:
            events = random_hyper_events(rng, n, length, rank=3)
        else:
            events = random_graph_events(rng, n, length)
        # split queries between value and subgraph requests
        events = [(rng.choice(["qv", "qs"]), ()) if op == "qv" else (op, p) for op, p in events]
        events.append(("qs", ()))
        name = f"{'hyper' if hyper else 'graph'}_{i:02d}.dsg"
        yield name, format_stream(n, events, rank=3 if hyper else None)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for name, text in corpus(args.count, args.seed):
        (args.out / name).write_text(text)
    print(f"wrote {args.count} streams to {args.out}")


if __name__ == "__main__":
    main()
