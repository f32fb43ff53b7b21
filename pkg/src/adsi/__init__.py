"""Frequency-domain augmentation (ADSI) and the domain-independence metric."""

from .augment import AugmentConfig, AugmentRecord, Draw, apply_mask, augment_corpus, augment_image
from .di import (
    DIReport,
    SweepCurve,
    amplitude_phase_di,
    beta_sweep,
    domain_independence,
    pairwise_distances,
)
from .embeddings import FeatureSet, FeatureVector, builtin_embed, load_features
from .errors import FeatureParseError, InvalidInputError, ParameterError
from .masks import FrequencyMask, adsi_mask, box_mask, butterworth_mask, circle_mask
from .spectral import SpectralImage, forward_spectrum, inverse_spectrum

__all__ = [
    "AugmentConfig",
    "AugmentRecord",
    "DIReport",
    "Draw",
    "FeatureParseError",
    "FeatureSet",
    "FeatureVector",
    "FrequencyMask",
    "InvalidInputError",
    "ParameterError",
    "SpectralImage",
    "SweepCurve",
    "adsi_mask",
    "amplitude_phase_di",
    "apply_mask",
    "augment_corpus",
    "augment_image",
    "beta_sweep",
    "box_mask",
    "builtin_embed",
    "butterworth_mask",
    "circle_mask",
    "domain_independence",
    "forward_spectrum",
    "inverse_spectrum",
    "load_features",
    "pairwise_distances",
]
