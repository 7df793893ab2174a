"""Finite-volume census with ambient spaces, generating rows and a discreteness check."""

import argparse
from collections import Counter

from kleinian_rp.discreteness import DISCRETE, classify
from kleinian_rp.orbifolds import ambient_space, census_instance, finite_volume_census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=20)
    ap.add_argument("--jsonl", action="store_true", help="emit JSON lines only")
    args = ap.parse_args()

    entries = finite_volume_census("all", bound=args.bound)
    if args.jsonl:
        import json
        for e in entries:
            print(json.dumps(e.to_json(), sort_keys=True))
        return
    tally = Counter()
    for e in entries:
        inst = census_instance(e)
        verdict = classify(inst.params).verdict
        tally[(e.group.schema, e.compact)] += 1
        flag = "" if verdict == DISCRETE else f"  <-- {verdict}"
        print(f"{str(e):32} in {str(ambient_space(e.group.schema)):6} row {inst.label:>3}{flag}")
    print()
    for (schema, compact), n in sorted(tally.items()):
        print(f"{schema:6} {'compact' if compact else 'cusped':8} {n}")


if __name__ == "__main__":
    main()
