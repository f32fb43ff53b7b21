"""DI of amplitude-only and phase-only reconstructions next to the unmodified DI."""

import argparse

from adsi import synthetic
from adsi.di import amplitude_phase_di, corpus_di


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    a, b = synthetic.tinted_pair(count=args.count, seed=args.seed)
    result = amplitude_phase_di(a, b)
    print(f"unmodified      DI={corpus_di(a, b).di:.3f}")
    print(f"amplitude-only  DI={result.di_amplitude:.3f}")
    print(f"phase-only      DI={result.di_phase:.3f}")


if __name__ == "__main__":
    main()
