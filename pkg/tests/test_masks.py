import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from adsi import masks
from adsi.errors import ParameterError
from adsi.spectral import mirror

sizes = st.integers(2, 40)


def brute_force_zero_count(h, w, inside):
    count = 0
    for i in range(h):
        for j in range(w):
            if inside((i - h // 2) / h, (j - w // 2) / w):
                count += 1
    return count


def test_box_full_and_degenerate():
    assert np.all(masks.box_mask(9, 12, 0.5).weights == 0)
    m = masks.box_mask(8, 8, 0.0).weights
    assert m[4, 4] == 0 and m.sum() == 63


def test_box_quarter_on_16():
    m = masks.box_mask(16, 16, 0.25).weights
    assert np.sum(m == 0) == 81
    assert np.all(m[4:13, 4:13] == 0)
    assert brute_force_zero_count(16, 16, lambda u, v: abs(u) <= 0.25 and abs(v) <= 0.25) == 81


def test_circle_examples():
    m = masks.circle_mask(8, 8, 0.0).weights
    assert m[4, 4] == 0 and m.sum() == 63
    assert np.all(masks.circle_mask(8, 8, math.sqrt(2) / 2).weights == 0)
    # 49 lattice points with i^2 + j^2 <= 16, enumerated independently
    m = masks.circle_mask(16, 16, 0.25).weights
    assert np.sum(m == 0) == 49
    assert brute_force_zero_count(16, 16, lambda u, v: math.hypot(u, v) <= 0.25) == 49


@pytest.mark.parametrize("beta", [-0.1, 0.51])
def test_box_rejects_beta(beta):
    with pytest.raises(ParameterError):
        masks.box_mask(8, 8, beta)


def test_circle_rejects_negative_beta():
    with pytest.raises(ParameterError):
        masks.circle_mask(8, 8, -0.01)


def test_butterworth_analytics():
    assert masks.butterworth_weight(0.0, 0.2, 2) == 1.0
    for order in (1, 2, 3):
        assert masks.butterworth_weight(0.2, 0.2, order, 1e-8) == pytest.approx(0.5, abs=1e-6)
    assert masks.butterworth_weight(0.4, 0.2, 2, 1e-8) == pytest.approx(1 / 17, abs=1e-6)
    # scalar cross-check without numpy
    assert 1.0 / (1.0 + (0.4 / (0.2 + 1e-8)) ** 4) == pytest.approx(1 / 17, abs=1e-6)


def test_butterworth_mask_center_and_params():
    m = masks.butterworth_mask(64, 64, 0.2, 2)
    assert m.weights[32, 32] == 1.0
    assert m.kind == "butterworth"
    assert m.params == {"beta": 0.2, "order": 2, "epsilon": 1e-8}


@pytest.mark.parametrize("beta,order,eps", [(0.0, 2, 1e-8), (0.2, 0, 1e-8), (0.2, 1.5, 1e-8), (0.2, 2, 0.0), (0.6, 2, 1e-8)])
def test_butterworth_rejects(beta, order, eps):
    with pytest.raises(ParameterError):
        masks.butterworth_mask(8, 8, beta, order, eps)


def test_adsi_examples():
    bw = masks.butterworth_mask(32, 32, 0.2, 2)
    assert np.all(masks.adsi_mask(bw, 0.0).weights == 1.0)
    assert masks.adsi_mask(bw, 1.0).weights[16, 16] == pytest.approx(0.0, abs=1e-12)
    half = masks.adsi_mask(bw, 0.5).weights
    assert 1 - 0.5 * masks.butterworth_weight(0.2, 0.2, 2) == pytest.approx(0.75, abs=1e-6)
    np.testing.assert_allclose(half, 1 - 0.5 * bw.weights)
    with pytest.raises(ParameterError):
        masks.adsi_mask(bw, 1.5)
    with pytest.raises(ParameterError):
        masks.adsi_mask(masks.box_mask(32, 32, 0.1), 0.5)


def _all_masks(h, w, beta, order, alpha):
    bw = masks.butterworth_mask(h, w, max(beta, 1e-3), order)
    return [
        masks.box_mask(h, w, min(beta, 0.5)),
        masks.circle_mask(h, w, beta),
        bw,
        masks.adsi_mask(bw, alpha),
    ]


@given(sizes, sizes, st.floats(0, 0.5), st.sampled_from([1, 2, 3]), st.floats(0, 1))
def test_range_and_symmetry(h, w, beta, order, alpha):
    for m in _all_masks(h, w, beta, order, alpha):
        assert m.weights.min() >= 0.0 and m.weights.max() <= 1.0
        assert np.max(np.abs(m.weights - mirror(m.weights))) <= 1e-9


@given(st.floats(0.01, 0.5), st.sampled_from([1, 2, 3]), st.lists(st.floats(0, 0.8), min_size=2, max_size=20))
def test_butterworth_monotone(beta, order, radii):
    radii = np.sort(radii)
    weights = masks.butterworth_weight(radii, beta, order)
    assert np.all(np.diff(weights) <= 1e-15)


@given(sizes, sizes, st.floats(0.01, 0.4), st.floats(0, 1), st.floats(0, 1))
def test_adsi_non_increasing_in_alpha(h, w, beta, a1, a2):
    lo, hi = sorted((a1, a2))
    bw = masks.butterworth_mask(h, w, beta, 2)
    assert np.all(masks.adsi_mask(bw, hi).weights <= masks.adsi_mask(bw, lo).weights)


@given(sizes, sizes, st.floats(0, 0.5), st.floats(0, 0.5))
def test_binary_masks_nest(h, w, b1, b2):
    lo, hi = sorted((b1, b2))
    for build in (masks.box_mask, masks.circle_mask):
        small = build(h, w, lo).weights == 0
        large = build(h, w, hi).weights == 0
        assert np.all(large[small])


def test_removal_mask_kinds():
    np.testing.assert_array_equal(masks.removal_mask("box", 8, 8, 0.2).weights, masks.box_mask(8, 8, 0.2).weights)
    hp = masks.removal_mask("butterworth", 8, 8, 0.2, 2).weights
    np.testing.assert_allclose(hp, 1 - masks.butterworth_mask(8, 8, 0.2, 2).weights)
    with pytest.raises(ParameterError):
        masks.removal_mask("gaussian", 8, 8, 0.2)
