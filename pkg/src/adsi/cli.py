"""Command line: ``adsi augment | di | sweep | mask``.

Exit codes: 0 success, 1 runtime failure, 2 usage error (bad flags,
out-of-range values, missing inputs).
"""

import argparse
import csv
import logging
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from . import masks
from .augment import VARIANTS, AugmentConfig, augment_corpus
from .config import RunConfig
from .di import SWEEP_KINDS, beta_sweep, domain_independence
from .embeddings import FeatureSet, builtin_embed, embed_corpus, load_features
from .errors import InvalidInputError, ParameterError
from .rasters import list_images, load_image, to_uint8

log = logging.getLogger("adsi")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_betas(text):
    """``lo:hi:step`` (inclusive of hi) or a comma-separated list."""
    text = text.strip()
    if ":" in text:
        try:
            lo, hi, step = (float(p) for p in text.split(":"))
        except ValueError:
            raise UsageError(f"--betas expects lo:hi:step, got {text!r}") from None
        if step <= 0 or hi < lo:
            raise UsageError(f"--betas range must be ascending with positive step, got {text!r}")
        count = int(np.floor((hi - lo) / step + 1e-9)) + 1
        betas = [round(lo + i * step, 12) for i in range(count)]
    else:
        try:
            betas = [float(p) for p in text.split(",") if p.strip()]
        except ValueError:
            raise UsageError(f"--betas list must be numeric, got {text!r}") from None
    if not betas:
        raise UsageError("--betas is empty")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
        raise UsageError(f"--betas must be strictly increasing, got {betas}")
    if betas[0] < 0 or betas[-1] > 0.5:
        raise UsageError(f"--betas must lie in [0, 0.5], got {betas}")
    return betas


def parse_size(text):
    try:
        h, w = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"--size expects HxW, got {text!r}") from None
    if h < 2 or w < 2:
        raise UsageError(f"--size must be at least 2x2, got {text!r}")
    return h, w


def parse_orders(text):
    try:
        return tuple(int(p) for p in str(text).split(",") if p.strip())
    except ValueError:
        raise UsageError(f"--orders expects comma-separated integers, got {text!r}") from None


def _require_dir(path, flag):
    if path is None:
        raise UsageError(f"{flag} is required")
    if not Path(path).is_dir():
        raise FileNotFoundError(f"{flag}: no such directory: {path}")
    return Path(path)


def _load_corpus(directory, limit):
    files = list_images(directory)[:limit]
    if not files:
        raise InvalidInputError(f"no images in {directory}")
    return files, [load_image(p) for p in files]


def cmd_augment(cfg):
    src = _require_dir(cfg.input, "--input")
    if cfg.output is None:
        raise UsageError("--output is required")
    try:
        aug = AugmentConfig(
            variant=cfg.variant,
            beta_range=(cfg.beta_min, cfg.beta_max),
            alpha_range=(cfg.alpha_min, cfg.alpha_max),
            order_set=parse_orders(cfg.orders),
            epsilon=cfg.epsilon,
            seed=cfg.seed,
            clamp=cfg.clamp,
        )
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    report = augment_corpus(src, cfg.output, aug, workers=cfg.workers)
    if cfg.report:
        report.write_csv(cfg.report)
    ok = len(report.records)
    print(f"augmented {ok} of {len(report.entries)} images into {cfg.output}")
    for entry in report.failures:
        print(f"error: {entry.filename}: {entry.error}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILURE


def _check_di_inputs(cfg):
    for which in "ab":
        feature_path = getattr(cfg, f"features_{which}")
        if feature_path is not None:
            if not Path(feature_path).is_file():
                raise FileNotFoundError(f"--features-{which}: no such file: {feature_path}")
        else:
            _require_dir(getattr(cfg, which), f"--{which} (or --features-{which})")
    if cfg.embedder.startswith("file:") and not Path(cfg.embedder[5:]).is_file():
        raise FileNotFoundError(f"--embedder: no such file: {cfg.embedder[5:]}")


def _features_for(cfg, which):
    feature_path = getattr(cfg, f"features_{which}")
    corpus = getattr(cfg, which)
    if feature_path is not None:
        vectors = load_features(feature_path, which.upper(), id_column=cfg.id_column)[: cfg.limit]
        return np.array([v.values for v in vectors]), [v.source_id for v in vectors]
    directory = _require_dir(corpus, f"--{which}")
    files = list_images(directory)[: cfg.limit]
    if not files:
        raise InvalidInputError(f"no images in {directory}")
    if cfg.embedder == "builtin":
        return embed_corpus([load_image(p) for p in files]), [p.name for p in files]
    if cfg.embedder.startswith("file:"):
        source = cfg.embedder[len("file:"):]
        table = {v.source_id: v.values for v in load_features(source, id_column=True)}
        missing = [p.name for p in files if p.name not in table]
        if missing:
            raise InvalidInputError(f"{source} has no features for {missing[:3]}")
        return np.array([table[p.name] for p in files]), [p.name for p in files]
    raise UsageError(f"--embedder must be 'builtin' or 'file:<path>', got {cfg.embedder!r}")


def cmd_di(cfg):
    _check_di_inputs(cfg)
    fa, ids_a = _features_for(cfg, "a")
    fb, ids_b = _features_for(cfg, "b")
    features = FeatureSet(fa, fb, ids_a, ids_b)
    report = domain_independence(features)
    print(f"di = {report.di!r}")
    print(f"M = {report.cross_count}")
    print(f"N = {report.same_count}")
    if report.degenerate:
        print(f"warning: {report.tied} nearest-neighbor ties broken by lowest index", file=sys.stderr)
    if cfg.table:
        report.write_table(cfg.table, ids=[f"A:{i}" for i in ids_a] + [f"B:{i}" for i in ids_b])
    return EXIT_OK


def cmd_sweep(cfg):
    betas = parse_betas(cfg.betas)
    if cfg.mask not in SWEEP_KINDS:
        raise UsageError(f"--mask must be one of {SWEEP_KINDS}")
    if cfg.embedder != "builtin":
        raise UsageError("sweep embeds transformed images and supports only --embedder builtin")
    if cfg.output is None:
        raise UsageError("--output is required")
    dir_a, dir_b = _require_dir(cfg.a, "--a"), _require_dir(cfg.b, "--b")
    _, a = _load_corpus(dir_a, cfg.limit)
    _, b = _load_corpus(dir_b, cfg.limit)
    try:
        curve = beta_sweep(a, b, betas, cfg.mask, cfg.target, builtin_embed, cfg.order, cfg.epsilon)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    curve.write_csv(cfg.output)
    for beta, di in curve.points():
        print(f"beta = {beta:g}  di = {di:.4f}")
    return EXIT_OK


def build_mask(kind, h, w, beta, order, alpha, epsilon):
    if kind == "box":
        return masks.box_mask(h, w, beta)
    if kind == "circle":
        return masks.circle_mask(h, w, beta)
    if kind == "butterworth":
        return masks.butterworth_mask(h, w, beta, order, epsilon)
    if kind == "adsi":
        return masks.adsi_mask(masks.butterworth_mask(h, w, beta, order, epsilon), alpha)
    raise UsageError(f"unknown mask kind {kind!r}")


def write_mask(prefix, mask):
    """Exact weights as ``<prefix>.csv``; ``round(255 * weight)`` as ``<prefix>.png``."""
    prefix = Path(prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    csv_path = prefix.with_name(prefix.name + ".csv")
    png_path = prefix.with_name(prefix.name + ".png")
    with open(csv_path, "w", newline="") as fh:
        csv.writer(fh).writerows([[repr(float(v)) for v in row] for row in mask.weights])
    PILImage.fromarray(to_uint8(mask.weights), mode="L").save(png_path, format="PNG")
    return csv_path, png_path


def cmd_mask(cfg):
    h, w = parse_size(cfg.size)
    try:
        mask = build_mask(cfg.kind, h, w, cfg.beta, cfg.order, cfg.alpha, cfg.epsilon)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    csv_path, png_path = write_mask(cfg.output or "mask", mask)
    print(f"wrote {csv_path} and {png_path}")
    return EXIT_OK


COMMANDS = {"augment": cmd_augment, "di": cmd_di, "sweep": cmd_sweep, "mask": cmd_mask}


def _unit_float(name):
    def check(text):
        value = float(text)
        if not 0.0 <= value <= 1.0:
            raise argparse.ArgumentTypeError(f"{name} must be in [0, 1], got {value}")
        return value

    return check


def build_parser():
    defaults = RunConfig()
    parser = argparse.ArgumentParser(prog="adsi", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key = value file supplying defaults")
        p.add_argument("--save-config", help="write the resolved configuration here")
        p.add_argument("--epsilon", type=float)

    p = sub.add_parser("augment", help="augment every image in a directory")
    common(p)
    p.add_argument("--input")
    p.add_argument("--output")
    p.add_argument("--report", help="per-file CSV report")
    p.add_argument("--variant", choices=VARIANTS)
    p.add_argument("--beta-min", type=float)
    p.add_argument("--beta-max", type=float)
    p.add_argument("--alpha-min", type=_unit_float("--alpha-min"))
    p.add_argument("--alpha-max", type=_unit_float("--alpha-max"))
    p.add_argument("--orders", help="comma-separated Butterworth orders, e.g. 1,2,3")
    p.add_argument("--seed", type=int)
    p.add_argument("--no-clamp", dest="clamp", action="store_false", default=None)
    p.add_argument("--workers", type=int)

    p = sub.add_parser("di", help="domain independence of two corpora or feature files")
    common(p)
    p.add_argument("--a", help="image directory for dataset A")
    p.add_argument("--b", help="image directory for dataset B")
    p.add_argument("--features-a", help="feature CSV for dataset A")
    p.add_argument("--features-b", help="feature CSV for dataset B")
    p.add_argument("--id-column", action="store_true", default=None)
    p.add_argument("--embedder", help="builtin or file:<csv keyed by filename>")
    p.add_argument("--limit", type=int, help=f"vectors per dataset (default {defaults.limit})")
    p.add_argument("--table", help="per-item nearest-neighbor CSV")

    p = sub.add_parser("sweep", help="DI versus low-frequency cutoff")
    common(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--betas", help="lo:hi:step or comma list")
    p.add_argument("--mask", choices=SWEEP_KINDS)
    p.add_argument("--target", choices=("both", "amplitude", "phase"))
    p.add_argument("--order", type=int)
    p.add_argument("--embedder")
    p.add_argument("--limit", type=int)
    p.add_argument("--output", help="curve CSV (beta,di)")

    p = sub.add_parser("mask", help="export a frequency mask as CSV and 8-bit PNG")
    common(p)
    p.add_argument("--kind", choices=("box", "circle", "butterworth", "adsi"))
    p.add_argument("--beta", type=float)
    p.add_argument("--order", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--size", help="HxW")
    p.add_argument("--output", help="path prefix; writes <prefix>.csv and <prefix>.png")
    return parser


def resolve_config(args):
    """Merge config-file values and explicit flags (flags win) into a RunConfig."""
    try:
        cfg = RunConfig.load(args.config) if args.config else RunConfig()
    except ValueError as exc:
        raise UsageError(f"{args.config}: {exc}") from None
    overrides = {
        k: v
        for k, v in vars(args).items()
        if v is not None and k in asdict(cfg)
    }
    return cfg.replace(**overrides)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = resolve_config(args)
        if args.save_config:
            cfg.save(args.save_config)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, ParameterError) as exc:
        parser.print_usage(sys.stderr)
        print(f"adsi {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"adsi {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidInputError, ValueError, OSError) as exc:
        print(f"adsi {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
