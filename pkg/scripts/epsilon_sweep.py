#!/usr/bin/env python3
"""Cardinality staircase of the tolerance-relaxed skyline.

Sweeps the tolerance knob from -1 (everything survives) to +1 (nothing does,
once the skyline has at least two distinct members) and prints the survivor
count at each step. Negative values thin the classic skyline, positive values
thicken it; the step at 0 is the classic skyline itself.
"""

import argparse

from skyselect import epsilon_skyline, generate, load_csv, normalize, skyline


def sweep(ds, weights, steps: int) -> list[tuple[float, int]]:
    out = []
    for i in range(steps + 1):
        eps = -1.0 + 2.0 * i / steps
        out.append((eps, len(epsilon_skyline(ds, weights, eps))))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data", help="CSV of tuples; generated data when omitted")
    ap.add_argument("--dist", default="anticorrelated")
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--steps", type=int, default=20)
    ap.add_argument(
        "--weights",
        help="comma-separated, summing to 1; uniform when omitted",
    )
    args = ap.parse_args()

    ds = load_csv(args.data) if args.data else generate(
        args.dist, args.n, args.d, args.seed
    )
    ds = normalize(ds)
    if args.weights:
        weights = tuple(float(x) for x in args.weights.split(","))
    else:
        weights = tuple(1.0 / ds.dim for _ in range(ds.dim))

    print(f"n={len(ds)} d={ds.dim} |SKY|={len(skyline(ds))} weights={weights}")
    print(f"{'eps':>8}  {'survivors':>9}  bar")
    prev = None
    for eps, size in sweep(ds, weights, args.steps):
        bar = "#" * min(size, 60)
        mark = "" if prev is None or size <= prev else "  <- not anti-monotone"
        print(f"{eps:>8.2f}  {size:>9}  {bar}{mark}")
        prev = size


if __name__ == "__main__":
    main()
