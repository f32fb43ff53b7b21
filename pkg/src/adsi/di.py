"""Domain Independence (DI): how often a sample's nearest neighbor is foreign.

Vectors from two datasets are pooled; each vector looks up its nearest
neighbor (itself excluded, Euclidean distance, ties to the lowest index).
``M`` counts neighbors from the other dataset, ``N`` from the same one, and
``DI = M / (M + N)``. Two indistinguishable distributions give DI near 0.5;
perfectly separable ones give 0.
"""

import csv
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist, squareform

from . import masks
from .augment import apply_mask
from .embeddings import BUILTIN_ID, FeatureSet, builtin_embed, embed_corpus
from .errors import InvalidInputError, ParameterError
from .spectral import SpectralImage, as_image, forward_spectrum, inverse_spectrum

SWEEP_KINDS = ("box", "circle", "butterworth")


@dataclass(frozen=True)
class DIReport:
    di: float
    cross_count: int  # M
    same_count: int  # N
    neighbor: np.ndarray  # index of each item's nearest neighbor in the pooled order
    distance: np.ndarray
    cross: np.ndarray  # bool per item
    labels: np.ndarray  # 0 = A, 1 = B
    tied: int = 0  # items whose nearest distance is shared by several candidates
    duplicates: int = 0  # items with a zero-distance neighbor

    @property
    def total(self):
        return self.cross_count + self.same_count

    @property
    def degenerate(self):
        return self.tied > 0 or self.duplicates > 0

    def write_table(self, path, ids=None):
        names = "AB"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["index", "dataset", "id", "neighbor", "neighbor_dataset", "distance", "cross"])
            for i in range(len(self.labels)):
                j = int(self.neighbor[i])
                writer.writerow([
                    i,
                    names[self.labels[i]],
                    ids[i] if ids is not None else i,
                    j,
                    names[self.labels[j]],
                    repr(float(self.distance[i])),
                    int(self.cross[i]),
                ])


@dataclass
class SweepCurve:
    betas: list
    dis: list
    mask_kind: str
    target: str
    embedder_id: str
    reports: list = field(default_factory=list, repr=False)

    def points(self):
        return list(zip(self.betas, self.dis))

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["beta", "di"])
            for beta, di in self.points():
                writer.writerow([repr(float(beta)), repr(float(di))])


def pairwise_distances(features):
    """Symmetric Euclidean distance matrix over the pooled A-then-B vectors."""
    if not isinstance(features, FeatureSet):
        raise InvalidInputError("pairwise_distances expects a FeatureSet")
    pooled, _ = features.stacked()
    if len(pooled) < 2:
        raise InvalidInputError("need at least 2 vectors")
    return squareform(pdist(pooled, metric="euclidean"))


def domain_independence(features):
    n_a, n_b = features.counts
    if n_a < 2 or n_b < 2:
        raise InvalidInputError(f"each dataset needs at least 2 vectors, got {n_a} and {n_b}")
    dist = pairwise_distances(features)
    _, labels = features.stacked()
    np.fill_diagonal(dist, np.inf)
    neighbor = np.argmin(dist, axis=1)  # first minimum = lowest index
    nearest = dist[np.arange(len(dist)), neighbor]
    cross = labels[neighbor] != labels
    tied = int(np.sum(np.sum(dist == nearest[:, None], axis=1) > 1))
    m = int(cross.sum())
    n = len(labels) - m
    return DIReport(
        di=m / (m + n),
        cross_count=m,
        same_count=n,
        neighbor=neighbor,
        distance=nearest,
        cross=cross,
        labels=labels,
        tied=tied,
        duplicates=int(np.sum(nearest == 0.0)),
    )


def _check_corpus(corpus, name):
    images = [as_image(img) for img in corpus]
    if not images:
        raise InvalidInputError(f"corpus {name} is empty")
    return images


def remove_band(image, kind, beta, target="both", order=2, epsilon=masks.DEFAULT_EPSILON):
    """Zero out the low-frequency band of ``kind`` up to ``beta``; unclamped output."""
    x = as_image(image)
    _, h, w = x.shape
    mask = masks.removal_mask(kind, h, w, beta, order, epsilon)
    out, _ = inverse_spectrum(apply_mask(forward_spectrum(x), mask, target))
    return out


def beta_sweep(
    corpus_a,
    corpus_b,
    betas,
    mask_kind="box",
    target="both",
    embedder=builtin_embed,
    order=2,
    epsilon=masks.DEFAULT_EPSILON,
    embedder_id=None,
):
    """DI of both corpora after removing frequencies below each cutoff in ``betas``.

    Reconstructions are embedded without clamping: removing the DC term moves
    pixel values below zero, and clipping would reintroduce a low-frequency
    component.
    """
    betas = [float(b) for b in betas]
    if not betas:
        raise ParameterError("no betas given")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
        raise ParameterError(f"betas must be strictly increasing, got {betas}")
    if betas[0] < 0.0 or betas[-1] > 0.5:
        raise ParameterError(f"betas must lie in [0, 0.5], got {betas}")
    if mask_kind not in SWEEP_KINDS:
        raise ParameterError(f"mask kind must be one of {SWEEP_KINDS}, got {mask_kind!r}")
    a = _check_corpus(corpus_a, "A")
    b = _check_corpus(corpus_b, "B")

    dis, reports = [], []
    for beta in betas:
        fa = embed_corpus([remove_band(x, mask_kind, beta, target, order, epsilon) for x in a], embedder)
        fb = embed_corpus([remove_band(x, mask_kind, beta, target, order, epsilon) for x in b], embedder)
        report = domain_independence(FeatureSet(fa, fb))
        dis.append(report.di)
        reports.append(report)
    if embedder_id is None:
        embedder_id = BUILTIN_ID if embedder is builtin_embed else getattr(embedder, "__name__", "custom")
    return SweepCurve(betas, dis, mask_kind, target, embedder_id, reports)


def amplitude_only(image):
    """Reconstruction from amplitude with every phase set to zero."""
    s = forward_spectrum(image)
    return inverse_spectrum(SpectralImage(s.amplitude, np.zeros_like(s.phase)))[0]


def phase_only(image):
    """Reconstruction from phase with every amplitude set to one."""
    s = forward_spectrum(image)
    return inverse_spectrum(SpectralImage(np.ones_like(s.amplitude), s.phase))[0]


@dataclass(frozen=True)
class AmplitudePhaseDI:
    amplitude: DIReport
    phase: DIReport

    @property
    def di_amplitude(self):
        return self.amplitude.di

    @property
    def di_phase(self):
        return self.phase.di

    @property
    def degenerate(self):
        return self.amplitude.degenerate or self.phase.degenerate


def amplitude_phase_di(corpus_a, corpus_b, embedder=builtin_embed):
    a = _check_corpus(corpus_a, "A")
    b = _check_corpus(corpus_b, "B")
    reports = []
    for rebuild in (amplitude_only, phase_only):
        fa = embed_corpus([rebuild(x) for x in a], embedder)
        fb = embed_corpus([rebuild(x) for x in b], embedder)
        reports.append(domain_independence(FeatureSet(fa, fb)))
    return AmplitudePhaseDI(*reports)


def corpus_di(corpus_a, corpus_b, embedder=builtin_embed):
    """DI of two unmodified corpora."""
    a = _check_corpus(corpus_a, "A")
    b = _check_corpus(corpus_b, "B")
    return domain_independence(FeatureSet(embed_corpus(a, embedder), embed_corpus(b, embedder)))
