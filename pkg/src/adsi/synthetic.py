"""Constructed corpora for checking the method's qualitative claims."""

import numpy as np


def textured_image(rng, size=64, channels=3):
    """Random texture in roughly [0.1, 0.6]: band-limited noise plus a few rectangles."""
    h = w = size
    fy = np.fft.fftfreq(h)[:, None]
    fx = np.fft.fftfreq(w)[None, :]
    falloff = 1.0 / np.maximum(np.hypot(fy, fx), 1.0 / size)
    out = np.empty((channels, h, w))
    shapes = np.zeros((h, w))
    for _ in range(rng.integers(2, 5)):
        y0, x0 = rng.integers(0, size - 8, size=2)
        dy, dx = rng.integers(4, size // 2, size=2)
        shapes[y0:y0 + dy, x0:x0 + dx] += rng.uniform(-0.15, 0.15)
    for c in range(channels):
        noise = np.fft.ifft2(falloff * np.exp(2j * np.pi * rng.random((h, w)))).real
        noise = (noise - noise.mean()) / (noise.std() + 1e-12)
        out[c] = 0.35 + 0.06 * noise + shapes + rng.uniform(-0.05, 0.05)
    return np.clip(out, 0.1, 0.6)


def low_frequency_tint(size=64, strength=(0.3, 0.15, -0.15)):
    """Smooth periodic color gradient: one cycle across the image per channel.

    Only the lowest nonzero frequency bins (and DC) carry energy, so any box
    cutoff of at least ``1 / size`` removes it entirely.
    """
    y = np.arange(size)[:, None] / size
    x = np.arange(size)[None, :] / size
    wave = 0.5 + 0.5 * np.cos(2 * np.pi * (y + x))
    return np.stack([s * wave for s in strength])


def tinted_pair(count=50, size=64, seed=0, noise=0.01):
    """Two corpora sharing base images; B adds a fixed color gradient and mild noise.

    Returns ``(corpus_a, corpus_b)`` as lists of ``(3, size, size)`` arrays in [0, 1].
    """
    rng = np.random.default_rng(seed)
    tint = low_frequency_tint(size)
    a, b = [], []
    for _ in range(count):
        base = textured_image(rng, size)
        a.append(base)
        b.append(np.clip(base + tint + noise * rng.standard_normal(base.shape), 0.0, 1.0))
    return a, b


def step_edge(height=64, width=64, low=0.25, high=0.75, channels=3):
    """Vertical step: left half at ``low``, right half at ``high``."""
    img = np.full((channels, height, width), low)
    img[:, :, width // 2:] = high
    return img


def plateau_overshoot(output, guard=None):
    """Ringing on the plateaus of a filtered :func:`step_edge` image.

    Each half's plateau level is its median; the overshoot is the largest
    deviation from that level among pixels at least ``guard`` columns from
    either edge (default ``W // 8``). The guard band excludes the transition
    itself, which every high-pass keeps as a spike.
    """
    out = np.asarray(output)
    out = out.reshape(-1, out.shape[-1]) if out.ndim > 1 else out[None]
    width = out.shape[-1]
    if guard is None:
        guard = width // 8
    half = width // 2
    centers = np.arange(width) + 0.5
    # edges sit at column boundaries 0 (periodic wrap) and half
    dist = np.minimum.reduce([centers, np.abs(centers - half), width - centers])
    worst = 0.0
    for lo, hi in ((0, half), (half, width)):
        region = out[:, lo:hi]
        level = np.median(region)
        keep = dist[lo:hi] >= guard
        worst = max(worst, float(np.max(np.abs(region[:, keep] - level))))
    return worst
