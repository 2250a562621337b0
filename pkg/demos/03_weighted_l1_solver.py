"""Solving the constrained weighted-l1 analysis problem directly.

Reconstructs a 32x32 crop from 40% spread-spectrum measurements with unit
weights (plain analysis basis pursuit), then shows how down-weighting the
coefficients of the true support sharpens the solution.
"""

import numpy as np

from sarakit import (NoiseModel, SolverConfig, SpreadSpectrumConfig,
                     apply_noise, epsilon_for_noise, make_dictionary,
                     make_spread_spectrum, snr_db, solve_weighted_l1)
from sarakit.harness import DATA_DIR, load_image

x = load_image(DATA_DIR / "photo64.pgm")[16:48, 16:48]
n = x.size

phi = make_spread_spectrum(SpreadSpectrumConfig(seed=5, m=int(0.4 * n)), x.shape)
y0 = phi.forward(x)
y, sigma_n = apply_noise(y0, NoiseModel(30.0, seed=6))
eps = epsilon_for_noise(sigma_n, phi.m)
d = make_dictionary("db1,db2,db3,db4,db5,db6,db7,db8", x.shape, levels=4)

cfg = SolverConfig(epsilon=eps, positivity=True, max_iters=3000)
res = solve_weighted_l1(y, phi, d, np.ones(d.n_coeffs), cfg, keep_trace=True)
print(f"unit weights: SNR {snr_db(x, res.x_hat):.2f} dB after {res.iterations} "
      f"iterations (converged={res.converged})")
print(f"  objective {res.final_objective:.3f}, feasibility gap "
      f"{res.feasibility_gap:.2e}")
print("  objective trace (every 500 iters):",
      " ".join(f"{obj:.1f}" for it, obj, _ in res.trace if it % 500 == 0))

# oracle weights from the clean image's own coefficients
alpha_true = d.analysis(x.ravel())
gamma = 0.1 * np.abs(alpha_true).max()
w = gamma / (gamma + np.abs(alpha_true))
res_w = solve_weighted_l1(y, phi, d, w, cfg, warm_start=res.x_hat.ravel())
print(f"oracle-weighted rerun: SNR {snr_db(x, res_w.x_hat):.2f} dB "
      f"(weights concentrate the penalty off the true support)")
