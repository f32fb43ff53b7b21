import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def dft2_direct(x):
    """O(N^2) per-bin DFT of one (H, W) plane, returned on the centered grid."""
    h, w = x.shape
    out = np.zeros((h, w), dtype=complex)
    hh = np.arange(h)[:, None]
    ww = np.arange(w)[None, :]
    for i in range(h):
        m = i - h // 2
        for j in range(w):
            n = j - w // 2
            out[i, j] = np.sum(x * np.exp(-2j * np.pi * (hh * m / h + ww * n / w)))
    return out


def idct_basis_coefficient(x, p, q):
    """Orthonormal DCT-II coefficient (p, q) of a square plane by direct summation."""
    n = x.shape[0]
    total = 0.0
    for i in range(n):
        ci = np.cos(np.pi * (2 * i + 1) * p / (2 * n))
        for j in range(n):
            total += x[i, j] * ci * np.cos(np.pi * (2 * j + 1) * q / (2 * n))
    scale_p = np.sqrt(1.0 / n) if p == 0 else np.sqrt(2.0 / n)
    scale_q = np.sqrt(1.0 / n) if q == 0 else np.sqrt(2.0 / n)
    return scale_p * scale_q * total


def nearest_neighbor_di(a, b):
    """Brute-force DI: explicit loops, math.dist, strict < so the lowest index wins ties."""
    import math

    pooled = [(tuple(v), 0) for v in a] + [(tuple(v), 1) for v in b]
    cross = 0
    for i, (vi, li) in enumerate(pooled):
        best, best_j = math.inf, -1
        for j, (vj, _) in enumerate(pooled):
            if i == j:
                continue
            d = math.dist(vi, vj)
            if d < best:
                best, best_j = d, j
        if pooled[best_j][1] != li:
            cross += 1
    return cross / len(pooled)


_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record ``(ok, detail)`` for an acceptance criterion and assert it."""

    def check(label, ok, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        assert ok, f"{label}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
