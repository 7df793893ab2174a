"""Enumerate every family instance and classify it back; print per-row counts."""

import argparse
import time
from collections import Counter

from kleinian_rp.discreteness import DISCRETE, ROWS, classify, enumerate_instances


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-int", type=int, default=12)
    args = ap.parse_args()

    t0 = time.perf_counter()
    insts = list(enumerate_instances(max_int=args.max_int))
    counts, fails = Counter(), Counter()
    for inst in insts:
        counts[inst.label] += 1
        res = classify(inst.params)
        if res.verdict != DISCRETE or inst.key() not in {m.key() for m in res.matches}:
            fails[inst.label] += 1
    print(f"{'row':>4} {'instances':>10} {'failures':>9}")
    for spec in ROWS:
        print(f"{spec.label:>4} {counts[spec.label]:>10} {fails[spec.label]:>9}")
    print(f"total {len(insts)} instances, {sum(fails.values())} failures, "
          f"{time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
