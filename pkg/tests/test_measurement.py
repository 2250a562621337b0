import numpy as np
import pytest

from sarakit.errors import ConfigError, KindError, ZeroSignalError
from sarakit.measurement import (FourierMaskConfig, NoiseModel,
                                 SpreadSpectrumConfig, apply_noise,
                                 dirty_image, generate_ellipse_mask, load_mask,
                                 make_fourier_mask, make_spread_spectrum,
                                 save_mask)

rng = np.random.default_rng(7)


def real_adjoint_mismatch(op, trials=20):
    """max |Re<Ax, y> - <x, A^T y>| / (||x|| ||y||) over random pairs."""
    check = np.random.default_rng(123)
    worst = 0.0
    for _ in range(trials):
        x = check.standard_normal(op.n)
        y = check.standard_normal(op.m) + 1j * check.standard_normal(op.m)
        lhs = np.real(np.vdot(y, op.forward(x)))
        rhs = np.dot(x, op.adjoint(y))
        worst = max(worst, abs(lhs - rhs) / (np.linalg.norm(x) * np.linalg.norm(y)))
    return worst


def test_spread_spectrum_full_sampling_is_unitary():
    n = 16 * 16
    op = make_spread_spectrum(SpreadSpectrumConfig(seed=0, m=n), (16, 16),
                              modulation=np.ones((16, 16)))
    x = rng.standard_normal(n)
    assert abs(np.linalg.norm(op.forward(x)) - np.linalg.norm(x)) < 1e-10


def test_spread_spectrum_deterministic():
    a = make_spread_spectrum(SpreadSpectrumConfig(seed=5, m=100), (16, 16))
    b = make_spread_spectrum(SpreadSpectrumConfig(seed=5, m=100), (16, 16))
    assert np.array_equal(a.mask, b.mask)
    assert np.array_equal(a.modulation, b.modulation)
    x = rng.standard_normal(256)
    assert np.array_equal(a.forward(x), b.forward(x))
    c = make_spread_spectrum(SpreadSpectrumConfig(seed=6, m=100), (16, 16))
    assert not np.array_equal(a.mask, c.mask) or not np.array_equal(a.modulation, c.modulation)


def test_spread_spectrum_adjoint():
    op = make_spread_spectrum(SpreadSpectrumConfig(seed=1, m=120), (16, 16))
    assert set(np.unique(op.modulation)) <= {-1.0, 1.0}
    assert len(np.unique(op.mask)) == op.m
    assert real_adjoint_mismatch(op) < 1e-8


def test_spread_spectrum_m_too_large():
    with pytest.raises(ConfigError):
        make_spread_spectrum(SpreadSpectrumConfig(seed=0, m=300), (16, 16))


def test_fourier_full_mask_is_unitary():
    cfg = FourierMaskConfig(seed=0, image_side=16, target_m=256)
    op = make_fourier_mask(cfg, mask=np.arange(256))
    x = rng.standard_normal(256)
    assert abs(np.linalg.norm(op.forward(x)) - np.linalg.norm(x)) < 1e-10


@pytest.mark.parametrize("side,target", [(64, 588), (256, 9413)])
def test_mask_cardinality_exact(side, target):
    cfg = FourierMaskConfig(seed=3, image_side=side, target_m=target)
    mask = generate_ellipse_mask(cfg)
    assert mask.size == target
    assert len(np.unique(mask)) == target


def test_desk_scale_target_matches_proportional_rule():
    assert round(9413 * (64 / 256) ** 2) == 588


def test_fourier_mask_adjoint_and_nonexpansive():
    cfg = FourierMaskConfig(seed=2, image_side=64, target_m=588)
    op = make_fourier_mask(cfg)
    assert real_adjoint_mismatch(op) < 1e-8
    x = rng.standard_normal(op.n)
    assert np.linalg.norm(op.forward(x)) <= np.linalg.norm(x) + 1e-10


def test_mask_roundtrip(tmp_path):
    cfg = FourierMaskConfig(seed=4, image_side=32, target_m=200)
    mask = generate_ellipse_mask(cfg)
    path = tmp_path / "mask.txt"
    save_mask(path, mask, 32)
    assert np.array_equal(load_mask(path, 32), mask)


def test_noise_calibration_monte_carlo():
    m = 588
    y0 = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    realized = []
    for seed in range(1000):
        y, sigma_n = apply_noise(y0, NoiseModel(30.0, seed=seed))
        realized.append(20 * np.log10(np.linalg.norm(y0) / np.linalg.norm(y - y0)))
    realized = np.array(realized)
    inside = np.mean((realized > 28.0) & (realized < 32.0))
    assert inside > 0.99
    assert abs(np.mean(realized) - 30.0) < 0.5


def test_noise_deterministic_and_noiseless():
    y0 = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    y1, s1 = apply_noise(y0, NoiseModel(30.0, seed=9))
    y2, s2 = apply_noise(y0, NoiseModel(30.0, seed=9))
    assert np.array_equal(y1, y2) and s1 == s2
    clean, sigma = apply_noise(y0, NoiseModel(None))
    assert sigma == 0.0 and np.array_equal(clean, y0)


def test_noise_zero_signal():
    with pytest.raises(ZeroSignalError):
        apply_noise(np.zeros(10, dtype=complex), NoiseModel(30.0))


def test_dirty_image_full_mask_recovers():
    op = make_fourier_mask(FourierMaskConfig(seed=0, image_side=16, target_m=256),
                           mask=np.arange(256))
    x = rng.standard_normal((16, 16))
    assert np.max(np.abs(dirty_image(op, op.forward(x)) - x)) < 1e-10
    assert np.all(dirty_image(op, np.zeros(256, dtype=complex)) == 0)


def test_dirty_image_wrong_kind():
    op = make_spread_spectrum(SpreadSpectrumConfig(seed=0, m=10), (4, 4))
    with pytest.raises(KindError):
        dirty_image(op, np.zeros(10, dtype=complex))
