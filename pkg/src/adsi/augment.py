"""Frequency-domain augmentation: ADSI and its ablation variants.

Every variant follows the same path: forward transform, multiply the selected
spectral plane(s) by a mask, inverse transform, clamp. Variants differ only in
the mask family and which planes it touches:

=======================  ===================================  ===========
variant                  mask                                 planes
=======================  ===================================  ===========
adsi                     ``1 - alpha * butterworth``          both
butterworth-amplitude    ``1 - alpha * butterworth``          amplitude
color                    ``1 - alpha * butterworth``,         both
                         independent draw per channel
box / circle             ``1 - alpha * (1 - binary)``         both
box-amplitude            box, all-or-nothing                  amplitude
=======================  ===================================  ===========
"""

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import masks
from .errors import InvalidInputError, ParameterError
from .rasters import list_images, load_image, save_image
from .spectral import SpectralImage, as_image, forward_spectrum, inverse_spectrum, self_conjugate_mask

log = logging.getLogger(__name__)

VARIANTS = ("adsi", "box", "box-amplitude", "circle", "color", "butterworth-amplitude")
TARGETS = ("amplitude", "phase", "both")
_BUTTERWORTH_VARIANTS = ("adsi", "color", "butterworth-amplitude")
_AMPLITUDE_ONLY = ("box-amplitude", "butterworth-amplitude")


@dataclass(frozen=True)
class AugmentConfig:
    variant: str = "adsi"
    beta_range: tuple = (0.01, 0.4)
    alpha_range: tuple = (0.0, 1.0)
    order_set: tuple = (1, 2, 3)
    epsilon: float = masks.DEFAULT_EPSILON
    seed: int = 0
    clamp: bool = True

    def __post_init__(self):
        object.__setattr__(self, "beta_range", tuple(float(b) for b in self.beta_range))
        object.__setattr__(self, "alpha_range", tuple(float(a) for a in self.alpha_range))
        object.__setattr__(self, "order_set", tuple(sorted({int(n) for n in self.order_set})))
        if self.variant not in VARIANTS:
            raise ParameterError(f"unknown variant {self.variant!r}; choose from {VARIANTS}")
        b_lo, b_hi = self.beta_range
        a_lo, a_hi = self.alpha_range
        if b_lo > b_hi:
            raise ParameterError(f"beta range is reversed: {self.beta_range}")
        if self.variant in _BUTTERWORTH_VARIANTS:
            if not (0.0 < b_lo and b_hi <= 0.4):
                raise ParameterError(f"beta range must lie in (0, 0.4], got {self.beta_range}")
        elif not (0.0 <= b_lo and b_hi <= 0.5):
            raise ParameterError(f"beta range must lie in [0, 0.5], got {self.beta_range}")
        if not (0.0 <= a_lo <= a_hi <= 1.0):
            raise ParameterError(f"alpha range must satisfy 0 <= lo <= hi <= 1, got {self.alpha_range}")
        if not self.order_set or not set(self.order_set) <= {1, 2, 3}:
            raise ParameterError(f"orders must be a non-empty subset of {{1, 2, 3}}, got {self.order_set}")
        if not self.epsilon > 0:
            raise ParameterError(f"epsilon must be > 0, got {self.epsilon}")
        if not 0 <= self.seed < 2**64:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def per_channel(self):
        return self.variant == "color"


@dataclass(frozen=True)
class Draw:
    alpha: float
    beta: float
    order: int


@dataclass(frozen=True)
class AugmentRecord:
    alpha: tuple
    beta: tuple
    order: tuple
    per_channel: bool
    # effective removal factor per channel; differs from alpha only for box-amplitude
    applied: tuple
    residue: float


def sample_draw(config, rng):
    alpha = rng.uniform(*config.alpha_range)
    beta = rng.uniform(*config.beta_range)
    order = int(rng.choice(config.order_set))
    return Draw(float(alpha), float(beta), order)


def sample_draws(config, rng, channels):
    """One draw for the image, or one per channel for the color variant."""
    count = channels if config.per_channel else 1
    return [sample_draw(config, rng) for _ in range(count)]


def apply_mask(spectral, mask, target="both"):
    """Multiply the selected plane(s) of ``spectral`` by ``mask`` elementwise.

    ``mask`` is a FrequencyMask or array broadcastable as (H, W) or (C, H, W).
    Phase is scaled as plain radians, not re-wrapped. The exception is bins
    that are their own conjugate partner (DC and, for even sizes, the Nyquist
    bins): their coefficient must stay real, so the scaled phase is snapped to
    the nearer of 0 and the original +/-pi.
    """
    if target not in TARGETS:
        raise ParameterError(f"target must be one of {TARGETS}, got {target!r}")
    weights = mask.weights if isinstance(mask, masks.FrequencyMask) else np.asarray(mask, dtype=np.float64)
    c, h, w = spectral.shape
    if weights.shape not in ((h, w), (c, h, w)):
        raise InvalidInputError(f"mask shape {weights.shape} does not match spectrum {(c, h, w)}")
    amplitude, phase = spectral.amplitude, spectral.phase
    if target in ("amplitude", "both"):
        amplitude = amplitude * weights
    if target in ("phase", "both"):
        scaled = phase * weights
        snapped = np.where(np.abs(scaled) > np.pi / 2, np.sign(phase) * np.pi, 0.0)
        phase = np.where(self_conjugate_mask(h, w), snapped, scaled)
    return SpectralImage(amplitude=amplitude, phase=phase)


def variant_mask(variant, h, w, draw, epsilon=masks.DEFAULT_EPSILON):
    """Return ``(weights, applied_alpha)`` for one channel's draw."""
    if variant in _BUTTERWORTH_VARIANTS:
        butter = masks.butterworth_mask(h, w, draw.beta, draw.order, epsilon)
        return masks.adsi_mask(butter, draw.alpha).weights, draw.alpha
    if variant == "box":
        return masks.scaled_removal(masks.box_mask(h, w, draw.beta), draw.alpha).weights, draw.alpha
    if variant == "circle":
        return masks.scaled_removal(masks.circle_mask(h, w, draw.beta), draw.alpha).weights, draw.alpha
    if variant == "box-amplitude":
        # keep or remove outright; alpha ~ U(0, 1) makes this a fair coin
        removed = 1.0 if draw.alpha >= 0.5 else 0.0
        return masks.scaled_removal(masks.box_mask(h, w, draw.beta), removed).weights, removed
    raise ParameterError(f"unknown variant {variant!r}")


def augment_image(image, config, draw=None):
    """Augment one image. Returns ``(output, AugmentRecord)``.

    ``draw`` is a Draw (shared by all channels) or a list of Draws (one per
    channel, color variant). When omitted it is sampled from ``config.seed``.
    """
    x = as_image(image)
    c, h, w = x.shape
    if draw is None:
        draw = sample_draws(config, np.random.default_rng(config.seed), c)
    draws = [draw] if isinstance(draw, Draw) else list(draw)
    if len(draws) == 1:
        draws = draws * c
    if len(draws) != c:
        raise InvalidInputError(f"got {len(draws)} draws for a {c}-channel image")

    weights = []
    applied = []
    for d in draws:
        wts, eff = variant_mask(config.variant, h, w, d, config.epsilon)
        weights.append(wts)
        applied.append(eff)
    target = "amplitude" if config.variant in _AMPLITUDE_ONLY else "both"
    spectral = apply_mask(forward_spectrum(x), np.stack(weights), target)
    out, residue = inverse_spectrum(spectral, clamp=config.clamp)

    shown = draws if config.per_channel else draws[:1]
    record = AugmentRecord(
        alpha=tuple(d.alpha for d in shown),
        beta=tuple(d.beta for d in shown),
        order=tuple(d.order for d in shown),
        per_channel=config.per_channel,
        applied=tuple(applied if config.per_channel else applied[:1]),
        residue=residue,
    )
    return out, record


@dataclass
class CorpusEntry:
    filename: str
    record: AugmentRecord = None
    error: str = None


@dataclass
class CorpusReport:
    entries: list = field(default_factory=list)

    @property
    def records(self):
        return [e.record for e in self.entries if e.record is not None]

    @property
    def failures(self):
        return [e for e in self.entries if e.error is not None]

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["filename", "status", "alpha", "beta", "order", "applied", "per_channel", "residue", "error"])
            for e in self.entries:
                if e.record is None:
                    writer.writerow([e.filename, "error", "", "", "", "", "", "", e.error])
                    continue
                r = e.record
                writer.writerow([
                    e.filename,
                    "ok",
                    ";".join(repr(a) for a in r.alpha),
                    ";".join(repr(b) for b in r.beta),
                    ";".join(str(n) for n in r.order),
                    ";".join(repr(a) for a in r.applied),
                    int(r.per_channel),
                    f"{r.residue:.3e}",
                    "",
                ])


def file_generators(seed, count):
    """Independent generators bound to sorted-file positions 0..count-1."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def augment_corpus(input_path, output_path, config, workers=1):
    """Augment every image in ``input_path`` into ``output_path``.

    File ``i`` in lexicographic order always receives the ``i``-th child
    stream of ``config.seed``, so outputs do not depend on ``workers`` or on
    failures elsewhere in the directory. Unreadable files are reported and
    skipped.
    """
    files = list_images(input_path)
    if not files:
        raise InvalidInputError(f"no images found in {input_path}")
    output_path = Path(output_path)
    output_path.mkdir(parents=True, exist_ok=True)
    rngs = file_generators(config.seed, len(files))

    def work(item):
        path, rng = item
        try:
            img = load_image(path)
            draws = sample_draws(config, rng, img.shape[0])
            out, record = augment_image(img, config, draws)
            save_image(output_path / path.name, out)
        except (OSError, ValueError) as exc:
            log.warning("skipping %s: %s", path.name, exc)
            return CorpusEntry(path.name, error=str(exc))
        return CorpusEntry(path.name, record=record)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(work, zip(files, rngs)))
    else:
        entries = [work(item) for item in zip(files, rngs)]
    return CorpusReport(entries)
