"""Command-line front end: ``dyndsg [options] STREAM``."""

from __future__ import annotations

import argparse
import json
import sys

from .config import Config, ConfigError, as_fraction
from .stream import RUN_MODES, StreamError, parse_stream, run

EXIT_OK, EXIT_USAGE, EXIT_STREAM, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dyndsg", description="Approximate densest subgraph over an update stream.")
    p.add_argument("stream", help="stream file, or - for stdin")
    p.add_argument("--mode", choices=RUN_MODES, default=None,
                   help="default: combined, or hypergraph when the header declares a rank")
    p.add_argument("--eps", default="1/4", help="approximation parameter (rational or decimal)")
    p.add_argument("--alpha", default=None, help="override the derived alpha")
    p.add_argument("--budget-c", type=int, default=4, help="loop budget constant C")
    p.add_argument("--dup-k", type=int, default=None, help="override the duplication factor")
    p.add_argument("--threshold-t", type=int, default=None, help="override the truncation threshold")
    p.add_argument("--verify", action="store_true",
                   help="audit invariants after every event and oracle brackets at every query")
    p.add_argument("--metrics-only", action="store_true", help="print only the metrics line")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.stream == "-" else open(args.stream, encoding="utf-8").read()
    except OSError as exc:
        print(f"dyndsg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        stream = parse_stream(text)
    except StreamError as exc:
        print(f"dyndsg: {exc}", file=sys.stderr)
        return EXIT_STREAM
    mode = args.mode or ("hypergraph" if stream.rank is not None else "combined")
    try:
        config = Config(
            stream.n,
            eps=as_fraction(args.eps),
            alpha=None if args.alpha is None else as_fraction(args.alpha),
            budget_c=args.budget_c,
            dup_k=args.dup_k,
            threshold_t=args.threshold_t,
            rank=stream.rank or 2,
        )
        report = run(stream, mode, config, verify=args.verify)
    except StreamError as exc:
        print(f"dyndsg: {exc}", file=sys.stderr)
        return EXIT_STREAM
    except (ConfigError, ValueError, ZeroDivisionError) as exc:
        print(f"dyndsg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.metrics_only:
        for line in report.output_lines():
            print(line)
    print("metrics " + json.dumps(report.metrics(), sort_keys=True))
    for v in report.violations:
        print(f"dyndsg: violation: {v}", file=sys.stderr)
    return EXIT_VERIFY if report.violations else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
