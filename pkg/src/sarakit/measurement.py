"""Measurement operators and the noise model.

Two acquisition schemes over square images:

* spread spectrum: random +/-1 modulation, unitary FFT, random selection of
  frequencies without replacement;
* Fourier mask: selection of a fixed set of grid frequencies, generated as a
  superposition of arcs of ellipses mimicking a radio telescope's coverage.

Both are matrix-free with exact adjoints (real-part extraction on the image
side, since images are real). All randomness is driven by explicit seeds.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError, KindError, ZeroSignalError

SPREAD_SPECTRUM = "spread_spectrum"
FOURIER_MASK = "fourier_mask"


@dataclass(frozen=True)
class MeasurementOperator:
    """Linear map from a real image to M complex measurements."""

    forward: Callable[[np.ndarray], np.ndarray]
    adjoint: Callable[[np.ndarray], np.ndarray]
    m: int
    n: int
    kind: str
    shape: tuple
    mask: Optional[np.ndarray] = field(default=None, repr=False)
    modulation: Optional[np.ndarray] = field(default=None, repr=False)


@dataclass(frozen=True)
class SpreadSpectrumConfig:
    seed: int
    m: int


@dataclass(frozen=True)
class FourierMaskConfig:
    seed: int
    image_side: int
    target_m: int
    n_ellipses: int = 30
    points_per_arc: int = 200


@dataclass(frozen=True)
class NoiseModel:
    """Complex Gaussian noise calibrated to a target input SNR in dB.

    `input_snr_db=None` means noiseless (sigma_n = 0).
    """

    input_snr_db: Optional[float]
    seed: int = 0


def make_spread_spectrum(cfg: SpreadSpectrumConfig, shape,
                         modulation: Optional[np.ndarray] = None) -> MeasurementOperator:
    """Spread-spectrum operator on images of the given (rows, cols) shape.

    `modulation` overrides the seeded +/-1 sequence (used by tests to force
    the pure-FFT case).
    """
    rows, cols = shape
    n = rows * cols
    if not 0 < cfg.m <= n:
        raise ConfigError(f"m={cfg.m} outside (0, {n}]")
    rng = np.random.default_rng(cfg.seed)
    if modulation is None:
        modulation = rng.integers(0, 2, size=(rows, cols)) * 2.0 - 1.0
    else:
        modulation = np.asarray(modulation, dtype=float).reshape(rows, cols)
    omega = np.sort(rng.choice(n, size=cfg.m, replace=False))

    def forward(x):
        img = np.asarray(x, dtype=float).reshape(rows, cols)
        return np.fft.fft2(modulation * img, norm="ortho").ravel()[omega]

    def adjoint(y):
        grid = np.zeros((rows, cols), dtype=complex)
        grid.ravel()[omega] = y
        return (modulation * np.fft.ifft2(grid, norm="ortho").real).ravel()

    return MeasurementOperator(forward=forward, adjoint=adjoint, m=cfg.m, n=n,
                               kind=SPREAD_SPECTRUM, shape=(rows, cols),
                               mask=omega, modulation=modulation)


def _ellipse_arc_points(rng: np.random.Generator, side: int, n_points: int) -> np.ndarray:
    """Integer grid frequencies along one randomly parameterized ellipse arc."""
    center = rng.normal(scale=0.02 * side, size=2)
    a = rng.uniform(0.05, 0.45) * side
    b = a * rng.uniform(0.3, 1.0)
    theta = rng.uniform(0.0, np.pi)
    phi0 = rng.uniform(0.0, 2 * np.pi)
    span = rng.uniform(np.pi / 2, 2 * np.pi)
    phi = phi0 + np.linspace(0.0, span, n_points)
    u = a * np.cos(phi)
    v = b * np.sin(phi)
    rot = np.array([[np.cos(theta), -np.sin(theta)],
                    [np.sin(theta), np.cos(theta)]])
    pts = rot @ np.vstack((u, v)) + center[:, None]
    return np.mod(np.rint(pts).astype(int), side).T


def generate_ellipse_mask(cfg: FourierMaskConfig, max_rounds: int = 1000) -> np.ndarray:
    """Distinct flat frequency indices, exactly `target_m` of them."""
    side = cfg.image_side
    if not 0 < cfg.target_m <= side * side:
        raise ConfigError(f"target_m={cfg.target_m} outside (0, {side * side}]")
    rng = np.random.default_rng(cfg.seed)
    cells = set()
    for _ in range(max_rounds):
        for _ in range(cfg.n_ellipses):
            pts = _ellipse_arc_points(rng, side, cfg.points_per_arc)
            cells.update(int(r) * side + int(c) for r, c in pts)
        if len(cells) >= cfg.target_m:
            break
    else:
        raise ConfigError(
            f"could not reach {cfg.target_m} mask cells in {max_rounds} rounds"
        )
    mask = np.sort(np.fromiter(cells, dtype=int))
    if mask.size > cfg.target_m:
        keep = rng.choice(mask.size, size=cfg.target_m, replace=False)
        mask = np.sort(mask[keep])
    return mask


def make_fourier_mask(cfg: FourierMaskConfig,
                      mask: Optional[np.ndarray] = None) -> MeasurementOperator:
    """Masked unitary Fourier operator; `mask` overrides the arc generator."""
    side = cfg.image_side
    n = side * side
    if mask is None:
        mask = generate_ellipse_mask(cfg)
    else:
        mask = np.sort(np.unique(np.asarray(mask, dtype=int)))
        if mask.size and (mask[0] < 0 or mask[-1] >= n):
            raise ConfigError("mask indices out of range")

    def forward(x):
        img = np.asarray(x, dtype=float).reshape(side, side)
        return np.fft.fft2(img, norm="ortho").ravel()[mask]

    def adjoint(y):
        grid = np.zeros((side, side), dtype=complex)
        grid.ravel()[mask] = y
        return np.fft.ifft2(grid, norm="ortho").real.ravel()

    return MeasurementOperator(forward=forward, adjoint=adjoint, m=mask.size, n=n,
                               kind=FOURIER_MASK, shape=(side, side), mask=mask)


def apply_noise(y0: np.ndarray, model: NoiseModel):
    """Add circular complex Gaussian noise at the configured input SNR.

    Returns (noisy measurements, per-component noise std sigma_n) with
    sigma_n = ||y0|| * 10^(-ISNR/20) / sqrt(M), so the expected noise norm
    realizes the target SNR.
    """
    y0 = np.asarray(y0, dtype=complex)
    norm = np.linalg.norm(y0)
    if norm == 0.0:
        raise ZeroSignalError("cannot calibrate noise on a zero measurement vector")
    if model.input_snr_db is None or np.isinf(model.input_snr_db):
        return y0.copy(), 0.0
    m = y0.size
    sigma_n = norm * 10.0 ** (-model.input_snr_db / 20.0) / np.sqrt(m)
    rng = np.random.default_rng(model.seed)
    noise = sigma_n / np.sqrt(2.0) * (rng.standard_normal(m) + 1j * rng.standard_normal(m))
    return y0 + noise, sigma_n


def dirty_image(op: MeasurementOperator, y: np.ndarray) -> np.ndarray:
    """Inverse Fourier transform of the measurements, unmeasured points zero."""
    if op.kind != FOURIER_MASK:
        raise KindError(f"dirty image needs a Fourier-mask operator, got {op.kind}")
    grid = np.zeros(op.shape, dtype=complex)
    grid.ravel()[op.mask] = np.asarray(y, dtype=complex)
    return np.fft.ifft2(grid, norm="ortho").real


def save_mask(path, mask: np.ndarray, side: int) -> None:
    """Write mask cells as one 'row col' pair per line."""
    rows, cols = np.divmod(np.asarray(mask, dtype=int), side)
    with open(path, "w") as fh:
        for r, c in zip(rows, cols):
            fh.write(f"{r} {c}\n")


def load_mask(path, side: int) -> np.ndarray:
    """Read a mask written by `save_mask` back into flat indices."""
    pairs = np.loadtxt(path, dtype=int, ndmin=2)
    if pairs.size == 0:
        raise ConfigError(f"empty mask file {path}")
    if pairs.shape[1] != 2:
        raise ConfigError(f"mask file {path} must have 'row col' lines")
    if (pairs < 0).any() or (pairs >= side).any():
        raise ConfigError(f"mask coordinates out of range for side {side}")
    return np.sort(np.unique(pairs[:, 0] * side + pairs[:, 1]))
