"""Sparsity-averaging dictionary: a 1/sqrt(q)-scaled concatenation of frames.

Each frame is either an orthonormal Daubechies wavelet basis or the Dirac
(identity) basis. The concatenation is a tight frame, exposed matrix-free as
an analysis operator (image -> stacked coefficients) and its adjoint
synthesis operator. The 1/sqrt(q) factor lives inside both maps so they stay
mutually adjoint and analysis is an isometry.
"""

from dataclasses import dataclass, field

import numpy as np

from . import wavelets
from .errors import ConfigError, DimensionError


@dataclass(frozen=True)
class FrameId:
    """Identifier of one frame: 'dirac' or a Daubechies family 'db1'..'db8'."""

    name: str

    def __post_init__(self):
        if self.name != "dirac" and self.name not in wavelets.FAMILIES:
            raise ConfigError(f"unknown frame {self.name!r}")

    @property
    def is_dirac(self) -> bool:
        return self.name == "dirac"


@dataclass(frozen=True)
class SaraDictionary:
    """Concatenation of q frames over images with `shape` pixels."""

    frames: tuple
    shape: tuple
    levels: int
    _allow_duplicates: bool = field(default=False, repr=False)

    def __post_init__(self):
        if not self.frames:
            raise ConfigError("dictionary needs at least one frame")
        names = [f.name for f in self.frames]
        if not self._allow_duplicates and len(set(names)) != len(names):
            raise ConfigError(f"duplicate frames in {names}")
        rows, cols = self.shape
        if rows < 1 or cols < 1:
            raise ConfigError(f"bad image shape {self.shape}")
        eff = wavelets.clamp_levels(self.shape, self.levels)
        object.__setattr__(self, "levels", eff)

    @property
    def q(self) -> int:
        return len(self.frames)

    @property
    def n_pixels(self) -> int:
        return self.shape[0] * self.shape[1]

    @property
    def n_coeffs(self) -> int:
        return self.q * self.n_pixels

    def analysis(self, x: np.ndarray) -> np.ndarray:
        """Stacked per-frame coefficients, one length-N block per frame."""
        x = np.asarray(x, dtype=float)
        if x.size != self.n_pixels:
            raise DimensionError(
                f"image has {x.size} entries, dictionary expects {self.n_pixels}"
            )
        img = x.reshape(self.shape)
        scale = 1.0 / np.sqrt(self.q)
        blocks = []
        for frame in self.frames:
            if frame.is_dirac:
                blocks.append(scale * img.ravel())
            else:
                filt = wavelets.filter_taps(frame.name)
                dec = wavelets.dwt2_forward(img, filt, self.levels)
                blocks.append(scale * dec.coeffs)
        return np.concatenate(blocks)

    def synthesis(self, alpha: np.ndarray) -> np.ndarray:
        """Adjoint of `analysis`; inverts it exactly (tight frame)."""
        alpha = np.asarray(alpha, dtype=float)
        if alpha.size != self.n_coeffs:
            raise DimensionError(
                f"coefficient vector has {alpha.size} entries, expected {self.n_coeffs}"
            )
        n = self.n_pixels
        scale = 1.0 / np.sqrt(self.q)
        img = np.zeros(self.shape)
        for i, frame in enumerate(self.frames):
            block = alpha[i * n:(i + 1) * n]
            if frame.is_dirac:
                img += scale * block.reshape(self.shape)
            else:
                filt = wavelets.filter_taps(frame.name)
                dec = wavelets.WaveletDecomposition(
                    coeffs=block, levels=self.levels, shape=self.shape
                )
                img += scale * wavelets.dwt2_inverse(dec, filt)
        return img


def parse_frames(spec: str) -> tuple:
    """Parse a comma-separated frame list like 'dirac,db1,db2'."""
    names = [s.strip().lower() for s in spec.split(",") if s.strip()]
    if not names:
        raise ConfigError(f"empty dictionary spec {spec!r}")
    return tuple(FrameId(name) for name in names)


def daubechies_frames(up_to: int = 8) -> tuple:
    """The db1..db`up_to` frame list."""
    return tuple(FrameId(f"db{k}") for k in range(1, up_to + 1))


def make_dictionary(spec: str, shape, levels: int = 4) -> SaraDictionary:
    """Build a dictionary from a textual frame list."""
    return SaraDictionary(frames=parse_frames(spec), shape=tuple(shape), levels=levels)
