"""Feature vectors for the domain-independence metric.

Two providers: :func:`builtin_embed`, a fixed low-frequency DCT descriptor
that needs no model weights, and :func:`load_features` for vectors computed
elsewhere (e.g. mean-pooled ViT patch tokens) and stored as CSV.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy import fft as sfft
from scipy import ndimage

from .errors import FeatureParseError, InvalidInputError
from .spectral import as_image

EMBED_SIZE = 64
DCT_BLOCK = 8
BUILTIN_ID = "builtin-dct8"


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    source_dataset: str
    source_id: str = ""


@dataclass(frozen=True)
class FeatureSet:
    """Vectors from dataset A followed by dataset B, as two ``(n, D)`` arrays."""

    a: np.ndarray
    b: np.ndarray
    ids_a: tuple = ()
    ids_b: tuple = ()

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.a, dtype=np.float64))
        b = np.atleast_2d(np.asarray(self.b, dtype=np.float64))
        if a.ndim != 2 or b.ndim != 2:
            raise InvalidInputError("feature arrays must be 2D (count, dim)")
        if a.shape[1] != b.shape[1]:
            raise InvalidInputError(f"dimension mismatch: A has {a.shape[1]}, B has {b.shape[1]}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise InvalidInputError("feature values must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "ids_a", tuple(self.ids_a) or tuple(str(i) for i in range(len(a))))
        object.__setattr__(self, "ids_b", tuple(self.ids_b) or tuple(str(i) for i in range(len(b))))

    @classmethod
    def from_vectors(cls, vectors_a, vectors_b):
        return cls(
            np.array([v.values for v in vectors_a]),
            np.array([v.values for v in vectors_b]),
            tuple(v.source_id for v in vectors_a),
            tuple(v.source_id for v in vectors_b),
        )

    @property
    def counts(self):
        return len(self.a), len(self.b)

    @property
    def dim(self):
        return self.a.shape[1]

    def stacked(self):
        """All vectors in one array plus a label array (0 = A, 1 = B)."""
        labels = np.r_[np.zeros(len(self.a), dtype=int), np.ones(len(self.b), dtype=int)]
        return np.vstack([self.a, self.b]), labels

    def swapped(self):
        return FeatureSet(self.b, self.a, self.ids_b, self.ids_a)


def resize_bilinear(image, size=EMBED_SIZE):
    """Bilinear resample of every channel to ``size x size`` (pixel-center aligned)."""
    x = as_image(image)
    c, h, w = x.shape
    if (h, w) == (size, size):
        return x.copy()
    rows = (np.arange(size) + 0.5) * (h / size) - 0.5
    cols = (np.arange(size) + 0.5) * (w / size) - 0.5
    grid = np.meshgrid(rows, cols, indexing="ij")
    return np.stack([ndimage.map_coordinates(ch, grid, order=1, mode="nearest") for ch in x])


def builtin_embed(image):
    """Deterministic 198-dim descriptor of an image.

    Per channel, after resizing to 64x64: the lowest 8x8 block of the
    orthonormal type-II DCT (row-major), then the channel mean and standard
    deviation. Grayscale input is replicated to three channels so that mixed
    corpora share one dimension. Inputs outside [0, 1] are accepted so
    reconstructions with the DC term removed can be embedded unclamped.
    """
    x = resize_bilinear(image)
    if x.shape[0] == 1:
        x = np.repeat(x, 3, axis=0)
    parts = []
    for ch in x:
        coeffs = sfft.dctn(ch, type=2, norm="ortho")[:DCT_BLOCK, :DCT_BLOCK]
        parts.append(np.r_[coeffs.ravel(), ch.mean(), ch.std()])
    return np.concatenate(parts)


def embed_corpus(images, embedder=builtin_embed):
    return np.array([embedder(img) for img in images])


def load_features(path, label="A", id_column=False):
    """Parse a feature CSV: one vector per line, optional leading id column."""
    vectors = []
    width = None
    with open(path, newline="") as fh:
        for row_no, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if id_column:
                source_id, cells = row[0].strip(), row[1:]
            else:
                source_id, cells = str(len(vectors)), row
            if not cells:
                raise FeatureParseError("no feature values", row_no)
            if width is None:
                width = len(cells)
            elif len(cells) != width:
                raise FeatureParseError(f"expected {width} values, found {len(cells)}", row_no)
            try:
                values = np.array([float(cell) for cell in cells])
            except ValueError as exc:
                raise FeatureParseError(f"non-numeric value ({exc})", row_no) from None
            if not all(math.isfinite(v) for v in values):
                raise FeatureParseError("non-finite value", row_no)
            vectors.append(FeatureVector(values, label, source_id))
    if not vectors:
        raise FeatureParseError(f"{path}: no feature rows")
    return vectors


def save_features(path, vectors, ids=None):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for i, vec in enumerate(np.atleast_2d(vectors)):
            row = [repr(float(v)) for v in vec]
            writer.writerow(([ids[i]] if ids is not None else []) + row)
