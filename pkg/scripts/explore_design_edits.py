#!/usr/bin/env python3
"""Sweep single-coordinate design edits on a structure and tabulate the
verdicts.

For every diagonal observation gain and every initial-condition entry,
try pinning it to the constants 0 and 1 and report how the verdict
moves. This is the batch version of what the dashboard does
interactively.

Usage:
    python3 scripts/explore_design_edits.py [--example parent] [--structure FILE]
"""
import argparse
import itertools
import json
import sys
import time

from structid.bundled import get_example
from structid.service import AnalysisRequest, run_analysis


def analyze(structure, edits):
    start = time.perf_counter()
    result = run_analysis(AnalysisRequest(structure=structure, edits=tuple(edits)))
    elapsed = time.perf_counter() - start
    if not result.ok:
        stage = (result.error or {}).get("stage", "?")
        return f"error({stage})", elapsed, None
    dim = result.payload["solution"]["generic_dimension"]
    count = result.payload["solution"]["generic_count"]
    return result.verdict, elapsed, (dim, count)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--example", default="parent")
    parser.add_argument("--structure", help="structure file overriding --example")
    parser.add_argument(
        "--values", nargs="*", default=["0", "1"], help="constants to try per slot"
    )
    args = parser.parse_args()

    if args.structure:
        with open(args.structure, encoding="utf-8") as fh:
            structure = json.load(fh)
    else:
        structure = get_example(args.example)

    n = structure["n"]
    k = structure["k"]
    slots = [f"C[{i}][{i}]" for i in range(1, min(n, k) + 1)]
    slots += [f"x0[{i}]" for i in range(1, n + 1)]

    verdict, elapsed, shape = analyze(structure, ())
    print(f"baseline: {verdict}  dim/count={shape}  ({elapsed:.2f}s)")
    print()
    print(f"{'edit':<16} {'verdict':<10} {'dim':>4} {'count':>6} {'time':>7}")
    for slot, value in itertools.product(slots, args.values):
        edit = f"{slot}={value}"
        verdict, elapsed, shape = analyze(structure, (edit,))
        dim = "-" if shape is None else shape[0]
        count = "-" if shape is None or shape[1] is None else shape[1]
        print(f"{edit:<16} {verdict:<10} {dim:>4} {count:>6} {elapsed:>6.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
