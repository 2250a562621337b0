"""Orthonormal Daubechies transforms and the averaged multi-frame dictionary.

Shows that each db1..db8 basis is a perfect-reconstruction isometry and that
their 1/sqrt(q)-scaled concatenation is a tight frame: analysis preserves
energy and synthesis undoes it exactly.
"""

import numpy as np

from sarakit import dwt2_forward, dwt2_inverse, filter_taps, make_dictionary

rng = np.random.default_rng(0)
x = rng.random((32, 32))

print("per-basis round trips (3 levels):")
for k in range(1, 9):
    filt = filter_taps(f"db{k}")
    dec = dwt2_forward(x, filt, levels=3)
    err = np.max(np.abs(dwt2_inverse(dec, filt) - x))
    energy = np.linalg.norm(dec.coeffs) / np.linalg.norm(x)
    print(f"  db{k}: taps={len(filt.lowpass):2d}  max recon err={err:.2e}  "
          f"energy ratio={energy:.12f}")

print("\naveraged dictionary (q=8 concatenation):")
d = make_dictionary("db1,db2,db3,db4,db5,db6,db7,db8", (32, 32), levels=4)
alpha = d.analysis(x.ravel())
print(f"  coefficients: {alpha.size} = q*N = {d.q}*{d.n_pixels}")
print(f"  isometry: ||alpha||/||x|| = {np.linalg.norm(alpha)/np.linalg.norm(x):.12f}")
print(f"  tight frame: max |synthesis(analysis(x)) - x| = "
      f"{np.max(np.abs(d.synthesis(alpha) - x)):.2e}")

# a natural image is sparser on average across frames than pixel energy suggests
flat = np.sort(np.abs(alpha))[::-1]
k95 = np.searchsorted(np.cumsum(flat**2), 0.95 * np.sum(flat**2))
print(f"  95% of the energy sits in {k95} of {alpha.size} coefficients")
