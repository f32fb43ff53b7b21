"""Compare spatial ringing of hard box removal against the smooth ADSI mask on a step edge."""

import argparse

from adsi import synthetic
from adsi.augment import AugmentConfig, Draw, augment_image


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--order", type=int, default=2)
    parser.add_argument("--betas", type=float, nargs="+", default=[0.05, 0.1, 0.2, 0.3])
    args = parser.parse_args()

    step = synthetic.step_edge()
    print("beta   box      circle   adsi")
    for beta in args.betas:
        draw = Draw(alpha=args.alpha, beta=beta, order=args.order)
        row = []
        for variant in ("box", "circle", "adsi"):
            cfg = AugmentConfig(variant=variant, beta_range=(beta, beta), order_set=(args.order,), clamp=False)
            out, _ = augment_image(step, cfg, draw)
            row.append(synthetic.plateau_overshoot(out))
        print(f"{beta:.2f}   " + "   ".join(f"{v:.4f}" for v in row))


if __name__ == "__main__":
    main()
