"""Per-channel 2D Fourier transforms on a centered frequency grid.

Images are float arrays of shape ``(C, H, W)``; 2D arrays are promoted to a
single channel. Spectra keep the DC bin at ``(H // 2, W // 2)``.

The forward transform is unnormalized and the inverse carries the ``1/(HW)``
factor, so a constant image of value ``c`` has DC amplitude ``c * H * W``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError


@dataclass(frozen=True)
class SpectralImage:
    amplitude: np.ndarray  # (C, H, W), >= 0
    phase: np.ndarray  # (C, H, W), radians in [-pi, pi]

    def __post_init__(self):
        if self.amplitude.shape != self.phase.shape:
            raise InvalidInputError(
                f"amplitude shape {self.amplitude.shape} != phase shape {self.phase.shape}"
            )
        if self.amplitude.ndim != 3:
            raise InvalidInputError(f"expected (C, H, W) planes, got {self.amplitude.shape}")

    @property
    def shape(self):
        return self.amplitude.shape

    def complex(self):
        return self.amplitude * np.exp(1j * self.phase)


def as_image(image, check_range=False):
    """Return ``image`` as a float64 ``(C, H, W)`` array, validating its shape."""
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[None]
    if arr.ndim != 3:
        raise InvalidInputError(f"image must be (H, W) or (C, H, W), got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise InvalidInputError("image has no channels")
    if arr.shape[1] < 2 or arr.shape[2] < 2:
        raise InvalidInputError(f"image must be at least 2x2, got {arr.shape[1]}x{arr.shape[2]}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("image contains non-finite values")
    if check_range and (arr.min() < 0.0 or arr.max() > 1.0):
        raise InvalidInputError("image values must lie in [0, 1]")
    return arr


def conjugate_index(n):
    """Index map sending each centered bin to the bin holding its negative frequency.

    For even ``n`` the Nyquist bin (index 0) maps to itself, as does the center.
    """
    c = n // 2
    return (2 * c - np.arange(n)) % n


def self_conjugate_mask(h, w):
    """Boolean (H, W) grid marking bins that are their own conjugate partner.

    A real image has a purely real coefficient at these bins, so their phase is
    always 0 or pi.
    """
    rows = conjugate_index(h) == np.arange(h)
    cols = conjugate_index(w) == np.arange(w)
    return rows[:, None] & cols[None, :]


def mirror(plane):
    """Reflect the last two axes through the centered origin: ``out[k] = plane[-k]``."""
    h, w = plane.shape[-2:]
    return plane[..., conjugate_index(h)[:, None], conjugate_index(w)[None, :]]


def forward_spectrum(image):
    """Centered amplitude/phase decomposition of every channel of a real image.

    The complex spectrum is projected onto exact Hermitian symmetry before the
    polar split. For a real input this only moves coefficients by rounding
    noise, and it makes the phase plane exactly odd so that any centro-symmetric
    mask applied to it keeps the reconstruction real.
    """
    x = as_image(image)
    _, h, w = x.shape
    spec = np.fft.fftshift(np.fft.fft2(x), axes=(-2, -1))
    spec = 0.5 * (spec + np.conj(mirror(spec)))
    phase = np.angle(spec)
    # negative-real pairs would both read +pi; copy one half, negate into the other
    phase = np.where(_canonical_half(h, w), phase, -mirror(phase))
    return SpectralImage(amplitude=np.abs(spec), phase=phase)


def _canonical_half(h, w):
    """Bins whose flat index does not exceed their partner's (self-conjugate bins included)."""
    flat = np.arange(h * w).reshape(h, w)
    partner = conjugate_index(h)[:, None] * w + conjugate_index(w)[None, :]
    return flat <= partner


def inverse_spectrum(spectral, clamp=False):
    """Rebuild a spatial image from amplitude and phase planes.

    Returns ``(image, residue)`` where ``residue`` is the largest magnitude of
    the discarded imaginary part. Masked spectra need not be Hermitian; a large
    residue means the input planes were not consistent with a real image.
    """
    if not isinstance(spectral, SpectralImage):
        raise InvalidInputError("inverse_spectrum expects a SpectralImage")
    spec = np.fft.ifftshift(spectral.complex(), axes=(-2, -1))
    out = np.fft.ifft2(spec)
    residue = float(np.max(np.abs(out.imag))) if out.size else 0.0
    img = out.real
    if clamp:
        img = np.clip(img, 0.0, 1.0)
    return img, residue


def hermitian_residual(spectral):
    """Max deviation of a spectrum from amplitude-even / phase-odd symmetry.

    Phase differences are compared on the circle.
    """
    amp_err = np.max(np.abs(spectral.amplitude - mirror(spectral.amplitude)))
    dphi = spectral.phase + mirror(spectral.phase)
    dphi = np.angle(np.exp(1j * dphi))
    # phase is meaningless where there is no energy
    weight = spectral.amplitude > 1e-9 * max(1.0, float(spectral.amplitude.max()))
    phase_err = np.max(np.abs(dphi[weight])) if weight.any() else 0.0
    return float(max(amp_err, phase_err))


def energy(image):
    """Sum of squared samples."""
    return float(np.sum(np.square(image)))
