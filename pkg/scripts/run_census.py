#!/usr/bin/env python3
"""Zero-multiplicity census over a range of block shapes.

Runs the census for every (a, b) in the requested ranges and prints one JSON
line per board, so long sweeps can be resumed or diffed with standard tools.

    python3 scripts/run_census.py --max-a 3 --max-b 7
    python3 scripts/run_census.py --pairs 3,10 --jobs 8
"""

import argparse
import json
import os
import sys

from foulkes.vanishing import census


def parse_pairs(texts):
    pairs = []
    for text in texts:
        a, _, b = text.partition(",")
        pairs.append((int(a), int(b)))
    return pairs


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-a", type=int, default=3)
    parser.add_argument("--max-b", type=int, default=6)
    parser.add_argument("--pairs", nargs="*", default=None, metavar="A,B",
                        help="explicit boards instead of the full grid")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--time-limit", type=float, default=None,
                        help="budget per board, seconds")
    args = parser.parse_args(argv)

    if args.pairs:
        boards = parse_pairs(args.pairs)
    else:
        boards = [(a, b) for a in range(1, args.max_a + 1)
                  for b in range(1, args.max_b + 1)]
    for a, b in boards:
        report = census(a, b, jobs=args.jobs, deadline=args.time_limit)
        print(json.dumps(report.to_json_dict(), separators=(",", ":")), flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
