"""The two acquisition models: spread spectrum and masked Fourier sampling.

Builds both operators at 64x64, checks their adjoints numerically, shows the
ellipse-arc sampling pattern as ASCII art, and forms the dirty image a radio
imager would start from.
"""

import numpy as np

from sarakit import (FourierMaskConfig, NoiseModel, SpreadSpectrumConfig,
                     apply_noise, dirty_image, make_fourier_mask,
                     make_spread_spectrum, snr_db)
from sarakit.harness import DATA_DIR, load_image

x = load_image(DATA_DIR / "galaxy64.pgm")
n = x.size

print("spread spectrum, M = 0.3 N:")
ss = make_spread_spectrum(SpreadSpectrumConfig(seed=1, m=int(0.3 * n)), x.shape)
y = ss.forward(x)
print(f"  M={ss.m}, N={ss.n}, ||y||/||x|| = {np.linalg.norm(y)/np.linalg.norm(x):.4f}")
rng = np.random.default_rng(2)
a, b = rng.standard_normal(n), rng.standard_normal(ss.m) + 1j * rng.standard_normal(ss.m)
mismatch = abs(np.real(np.vdot(b, ss.forward(a))) - np.dot(a, ss.adjoint(b)))
print(f"  adjoint mismatch on a random pair: {mismatch:.2e}")

print("\nmasked Fourier, arcs-of-ellipses coverage, M = 588:")
fm = make_fourier_mask(FourierMaskConfig(seed=3, image_side=64, target_m=588))
print(f"  mask holds {fm.m} distinct grid frequencies")
grid = np.full((32, 64), " ")
for flat in fm.mask:
    r, c = divmod(int(flat), 64)
    if r % 2 == 0:
        grid[r // 2, c] = "#"
print("\n".join("  " + "".join(row) for row in grid))

y0 = fm.forward(x)
y, sigma_n = apply_noise(y0, NoiseModel(30.0, seed=4))
realized = 20 * np.log10(np.linalg.norm(y0) / np.linalg.norm(y - y0))
print(f"\n  noise: sigma_n={sigma_n:.3e}, realized input SNR {realized:.2f} dB")
dirty = dirty_image(fm, y)
print(f"  dirty image recovery SNR: {snr_db(x, dirty):.2f} dB "
      f"(reconstruction algorithms must beat this)")
