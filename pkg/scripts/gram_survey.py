"""Sign of the Gram determinant of R[n, m; q] over a small grid."""

import argparse

from kleinian_rp.orbifolds import gram_det, is_hyperbolic


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=13)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--q", type=int, default=2)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        d = gram_det(n, args.m, args.q)
        print(f"R[{n},{args.m};{args.q}]  det = {d:+.6f}  {'hyperbolic' if is_hyperbolic(n, args.m, args.q) else ''}")


if __name__ == "__main__":
    main()
