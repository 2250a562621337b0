"""Regenerate the ground-truth PGM assets shipped in src/sarakit/data.

Run once from the repo root: python3 tools/make_assets.py
Needs scikit-image (dev-only; the shipped PGMs are committed).
"""

import sys
from pathlib import Path

import numpy as np
from skimage import data
from skimage.transform import resize

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from sarakit.imageio import write_pgm  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "sarakit" / "data"


def photo(side: int) -> np.ndarray:
    img = data.camera().astype(float) / 255.0
    return resize(img, (side, side), anti_aliasing=True)


def galaxy(side: int, seed: int = 7) -> np.ndarray:
    """Synthetic spiral-galaxy-like image: bright core, elliptical exponential
    disk, faint spiral modulation, and a few point sources."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:side, 0:side]
    cy = cx = (side - 1) / 2.0
    u = xx - cx
    v = yy - cy
    theta = np.deg2rad(35.0)
    ur = np.cos(theta) * u + np.sin(theta) * v
    vr = -np.sin(theta) * u + np.cos(theta) * v
    r = np.sqrt(ur ** 2 + (vr / 0.45) ** 2)
    disk = np.exp(-r / (0.16 * side))
    core = 2.5 * np.exp(-(ur ** 2 + vr ** 2) / (2 * (0.02 * side) ** 2))
    phi = np.arctan2(vr / 0.45, ur)
    spiral = 1.0 + 0.35 * np.cos(2 * phi - r / (0.1 * side))
    img = disk * spiral + core
    for _ in range(12):
        px, py = rng.integers(0, side, size=2)
        img[py, px] += rng.uniform(0.3, 1.2)
    img /= img.max()
    return img


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for side in (64, 128, 256):
        write_pgm(OUT / f"photo{side}.pgm", photo(side), bits=16)
        write_pgm(OUT / f"galaxy{side}.pgm", galaxy(side), bits=16)
    print(f"assets written to {OUT}")


if __name__ == "__main__":
    main()
