"""Frequency masks on the centered grid.

Frequencies are normalized per axis, ``u = (h - H//2) / H`` and
``v = (w - W//2) / W``, so cutoffs are fractions of the image size and do not
depend on resolution. Box and circle masks are 0 inside the cutoff region
(boundary included) and 1 outside.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

DEFAULT_EPSILON = 1e-8
# absorbs rounding in u, v, r so that exact boundary bins land inside the cutoff
_BOUNDARY_TOL = 1e-12
MASK_KINDS = ("box", "circle", "butterworth", "adsi-attenuation")


@dataclass(frozen=True)
class FrequencyMask:
    weights: np.ndarray  # (H, W)
    kind: str
    params: dict = field(default_factory=dict)

    @property
    def shape(self):
        return self.weights.shape


def frequency_grid(h, w):
    """Return ``(u, v, r)`` arrays of shape (H, W) for the centered grid."""
    if h < 1 or w < 1:
        raise ParameterError(f"grid size must be positive, got {h}x{w}")
    u = (np.arange(h) - h // 2) / h
    v = (np.arange(w) - w // 2) / w
    uu, vv = np.meshgrid(u, v, indexing="ij")
    return uu, vv, np.hypot(uu, vv)


def box_mask(h, w, beta):
    if not 0.0 <= beta <= 0.5:
        raise ParameterError(f"box beta must be in [0, 0.5], got {beta}")
    u, v, _ = frequency_grid(h, w)
    inside = (np.abs(u) <= beta + _BOUNDARY_TOL) & (np.abs(v) <= beta + _BOUNDARY_TOL)
    return FrequencyMask(np.where(inside, 0.0, 1.0), "box", {"beta": beta})


def circle_mask(h, w, beta):
    if beta < 0.0:
        raise ParameterError(f"circle beta must be >= 0, got {beta}")
    _, _, r = frequency_grid(h, w)
    inside = r <= beta + _BOUNDARY_TOL
    return FrequencyMask(np.where(inside, 0.0, 1.0), "circle", {"beta": beta})


def butterworth_weight(r, beta, order, epsilon=DEFAULT_EPSILON):
    """Low-pass response ``1 / (1 + (r / (beta + epsilon))**(2 * order))``."""
    r = np.asarray(r, dtype=np.float64)
    ratio = r / (beta + epsilon)
    with np.errstate(over="ignore"):
        return 1.0 / (1.0 + ratio ** (2 * order))


def butterworth_mask(h, w, beta, order=2, epsilon=DEFAULT_EPSILON):
    """Smooth low-pass mask: ~1 at DC, 0.5 at radius ``beta``, falling toward 0.

    Accepts ``0 < beta <= 0.5``; the augmentation itself keeps beta within 0.4.
    """
    if not 0.0 < beta <= 0.5:
        raise ParameterError(f"butterworth beta must be in (0, 0.5], got {beta}")
    if int(order) != order or order < 1:
        raise ParameterError(f"butterworth order must be a positive integer, got {order}")
    if not epsilon > 0.0:
        raise ParameterError(f"epsilon must be > 0, got {epsilon}")
    _, _, r = frequency_grid(h, w)
    weights = butterworth_weight(r, beta, int(order), epsilon)
    return FrequencyMask(
        weights, "butterworth", {"beta": beta, "order": int(order), "epsilon": epsilon}
    )


def adsi_mask(butter, alpha):
    """Attenuation mask ``1 - alpha * butter``: shrinks low frequencies by up to ``alpha``."""
    if butter.kind != "butterworth":
        raise ParameterError(f"adsi_mask needs a butterworth mask, got {butter.kind!r}")
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must be in [0, 1], got {alpha}")
    return FrequencyMask(
        1.0 - alpha * butter.weights, "adsi-attenuation", {**butter.params, "alpha": alpha}
    )


def scaled_removal(binary, alpha):
    """Blend a binary removal mask toward identity: ``1 - alpha * (1 - binary)``."""
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must be in [0, 1], got {alpha}")
    return FrequencyMask(
        1.0 - alpha * (1.0 - binary.weights), binary.kind, {**binary.params, "alpha": alpha}
    )


def removal_mask(kind, h, w, beta, order=2, epsilon=DEFAULT_EPSILON):
    """Mask that removes the low-frequency region of the given kind outright.

    ``box`` and ``circle`` are returned as-is; ``butterworth`` becomes the
    complementary high-pass ``1 - butterworth``.
    """
    if kind == "box":
        return box_mask(h, w, beta)
    if kind == "circle":
        return circle_mask(h, w, beta)
    if kind == "butterworth":
        return adsi_mask(butterworth_mask(h, w, beta, order, epsilon), 1.0)
    raise ParameterError(f"unknown removal mask kind {kind!r}")

