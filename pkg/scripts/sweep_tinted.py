"""DI as a function of the low-frequency cutoff on a synthetic tinted corpus pair.

    python scripts/sweep_tinted.py --count 50 --kind box --out sweep.csv
"""

import argparse

import numpy as np

from adsi import synthetic
from adsi.di import SWEEP_KINDS, beta_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--size", type=int, default=64)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--kind", choices=SWEEP_KINDS, default="box")
    parser.add_argument("--target", choices=("both", "amplitude", "phase"), default="both")
    parser.add_argument("--out", default=None, help="optional CSV path for the curve")
    args = parser.parse_args()

    a, b = synthetic.tinted_pair(count=args.count, size=args.size, seed=args.seed)
    curve = beta_sweep(a, b, np.round(np.arange(0.0, 0.41, 0.05), 4), mask_kind=args.kind, target=args.target)
    for (beta, di), report in zip(curve.points(), curve.reports):
        flag = "  (ties/duplicates)" if report.degenerate else ""
        print(f"beta={beta:.2f}  DI={di:.3f}{flag}")
    if args.out:
        curve.write_csv(args.out)


if __name__ == "__main__":
    main()
