"""Exit criteria, one test each. Results are summarized at the end of the run."""

import time

import numpy as np
import pytest

from adsi import masks, synthetic
from adsi.augment import VARIANTS, AugmentConfig, Draw, augment_image, sample_draws
from adsi.cli import main
from adsi.di import beta_sweep, domain_independence
from adsi.embeddings import FeatureSet
from adsi.rasters import save_image
from adsi.spectral import SpectralImage, energy, forward_spectrum, inverse_spectrum

from conftest import nearest_neighbor_di


def test_c1_fft_roundtrip(criterion):
    rng = np.random.default_rng(1)
    sizes = [(7, 9), (8, 8), (64, 64), (255, 257)]
    start = time.perf_counter()
    worst = 0.0
    for i in range(100):
        x = rng.random((3, *sizes[i % 4]))
        out, _ = inverse_spectrum(forward_spectrum(x))
        worst = max(worst, float(np.max(np.abs(out - x))))
    elapsed = time.perf_counter() - start
    criterion("C1 FFT roundtrip", worst < 1e-6 and elapsed < 10, f"max err {worst:.2e}, {elapsed:.2f}s")


def test_c2_adsi_output_real(criterion):
    rng = np.random.default_rng(2)
    cfg = AugmentConfig(variant="adsi", clamp=False)
    worst = 0.0
    for i in range(50):
        h, w = rng.integers(2, 80, size=2)
        x = rng.random((3, h, w))
        _, rec = augment_image(x, cfg, sample_draws(cfg, rng, 3))
        worst = max(worst, rec.residue)
    criterion("C2 ADSI imaginary residue", worst < 1e-6, f"max residue {worst:.2e}")


def test_c3_butterworth_analytics(criterion):
    at_dc = [masks.butterworth_weight(0.0, b, n) for b in (0.05, 0.2, 0.4) for n in (1, 2, 3)]
    at_cut = [masks.butterworth_weight(b, b, n, 1e-8) for b in (0.05, 0.2, 0.4) for n in (1, 2, 3)]
    at_04 = masks.butterworth_weight(0.4, 0.2, 2, 1e-8)
    radii = np.linspace(0, np.sqrt(2) / 2, 500)
    monotone = all(
        np.all(np.diff(masks.butterworth_weight(radii, b, n)) <= 0) for b in (0.05, 0.2, 0.4) for n in (1, 2, 3)
    )
    ok = (
        max(abs(v - 1) for v in at_dc) <= 1e-9
        and max(abs(v - 0.5) for v in at_cut) <= 1e-6
        and abs(at_04 - 1 / 17) <= 1e-6
        and monotone
    )
    criterion("C3 Butterworth analytics", ok, f"w(0.4; 0.2, 2) = {at_04:.8f}, monotone={monotone}")


def test_c4_identity_at_zero_alpha(criterion):
    rng = np.random.default_rng(4)
    worst = 0.0
    for variant in VARIANTS:
        beta = (0.01, 0.4) if variant in ("adsi", "color", "butterworth-amplitude") else (0.0, 0.5)
        cfg = AugmentConfig(variant=variant, beta_range=beta, alpha_range=(0.0, 0.0))
        for _ in range(20):
            x = rng.random((3, *rng.integers(2, 48, size=2)))
            out, _ = augment_image(x, cfg, sample_draws(cfg, rng, 3))
            worst = max(worst, float(np.max(np.abs(out - x))))
    criterion("C4 identity at alpha=0", worst < 1e-5, f"max deviation {worst:.2e} over {len(VARIANTS)} variants")


def test_c5_di_matches_brute_force(criterion):
    rng = np.random.default_rng(5)
    mismatches = 0
    for _ in range(200):
        n_a = int(rng.integers(2, 11))
        n_b = int(rng.integers(2, 21 - n_a))
        dim = int(rng.integers(1, 6))
        fs = FeatureSet(rng.standard_normal((n_a, dim)), rng.standard_normal((n_b, dim)) + rng.uniform(-1, 1))
        if domain_independence(fs).di != nearest_neighbor_di(fs.a, fs.b):
            mismatches += 1
    criterion("C5 DI oracle equivalence", mismatches == 0, f"{mismatches} mismatches in 200 sets")


def test_c6_di_calibration(criterion):
    same, separated = [], []
    for seed in range(20):
        r = np.random.default_rng(600 + seed)
        same.append(domain_independence(FeatureSet(r.standard_normal((300, 10)), r.standard_normal((300, 10)))).di)
        separated.append(
            domain_independence(FeatureSet(r.standard_normal((300, 10)), r.standard_normal((300, 10)) + 100.0)).di
        )
    mean = float(np.mean(same))
    ok = 0.43 <= mean <= 0.57 and all(d == 0.0 for d in separated)
    criterion("C6 DI calibration", ok, f"same-distribution mean {mean:.4f}, separated max {max(separated)}")


def test_c7_sweep_trend(criterion):
    start = time.perf_counter()
    a, b = synthetic.tinted_pair(count=50, seed=0)
    curve = beta_sweep(a, b, [0.0, 0.1, 0.2, 0.3, 0.4])
    elapsed = time.perf_counter() - start
    gain = curve.dis[-1] - curve.dis[0]
    ok = gain >= 0.05 and elapsed < 300
    points = ", ".join(f"{b:g}:{d:.2f}" for b, d in curve.points())
    criterion("C7 DI rises with cutoff", ok, f"DI(0.4) - DI(0) = {gain:.3f} [{points}], {elapsed:.1f}s")


def test_c8_ringing(criterion):
    step = synthetic.step_edge()
    draw = Draw(alpha=1.0, beta=0.2, order=2)
    box, _ = augment_image(step, AugmentConfig(variant="box", beta_range=(0.2, 0.2), clamp=False), draw)
    ours, _ = augment_image(step, AugmentConfig(variant="adsi", beta_range=(0.2, 0.2), clamp=False), draw)
    ob, oa = synthetic.plateau_overshoot(box), synthetic.plateau_overshoot(ours)
    criterion("C8 ringing contrast", ob > oa, f"box overshoot {ob:.4f} vs ADSI {oa:.4f}")


def test_c9_determinism(criterion, tmp_path):
    rng = np.random.default_rng(9)
    src = tmp_path / "in"
    src.mkdir()
    for i in range(4):
        save_image(src / f"img{i}.png", rng.random((3, 24, 20)))
    args = ["augment", "--input", str(src), "--seed", "123", "--variant", "adsi"]
    codes = [main(args + ["--output", str(tmp_path / f"run{k}")]) for k in (1, 2)]
    identical = all(
        (tmp_path / "run1" / f"img{i}.png").read_bytes() == (tmp_path / "run2" / f"img{i}.png").read_bytes()
        for i in range(4)
    )
    bad_sets = 0
    for _ in range(50):
        fs = FeatureSet(rng.standard_normal((int(rng.integers(2, 30)), 6)), rng.standard_normal((int(rng.integers(2, 30)), 6)))
        di = domain_independence(fs).di
        scale = float(rng.uniform(0.01, 100))
        if domain_independence(fs.swapped()).di != di or domain_independence(FeatureSet(fs.a * scale, fs.b * scale)).di != di:
            bad_sets += 1
    ok = codes == [0, 0] and identical and bad_sets == 0
    criterion("C9 determinism and DI invariances", ok, f"bytes identical={identical}, invariance failures={bad_sets}")


def test_c10_energy(criterion):
    rng = np.random.default_rng(10)
    worst = -np.inf
    for i in range(50):
        x = rng.random((3, *rng.integers(2, 64, size=2)))
        spec = forward_spectrum(x)
        _, h, w = x.shape
        for weights in (rng.random((h, w)), masks.adsi_mask(masks.butterworth_mask(h, w, 0.2, 2), rng.random()).weights):
            out, _ = inverse_spectrum(SpectralImage(spec.amplitude * weights, spec.phase))
            worst = max(worst, energy(out) - energy(x))
    criterion("C10 energy non-increase", worst <= 1e-6, f"max energy change {worst:.3e}")
