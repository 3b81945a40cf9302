"""
Why verdicts use all nine operators
===================================

Three of the face conditions can be folded pairwise into single complex
forms ``S = s_odd + i s_even``. That shrinks the weight vector from nine to
six entries, but ``x + i y = 0`` does not force ``x = y = 0`` for complex
``x, y``. Solving the six reduced equations numerically turns up entangled
states that the reduced set calls separable.
"""

import numpy as np
from scipy.optimize import least_squares

import sep3q

reduced = sep3q.build_s_operators("reduced")


def residual(x):
    a = x[:8] + 1j * x[8:]
    a = a / np.linalg.norm(a)
    c = np.einsum("m,amn,n->a", a, reduced.matrices, a)
    return np.concatenate([c.real, c.imag])


for seed in range(6):
    fit = least_squares(residual, np.random.default_rng(seed).standard_normal(16), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    psi = sep3q.pure_from_amplitudes(fit.x[:8] + 1j * fit.x[8:])
    print(
        f"seed {seed}: reduced |C| = {sep3q.c_vector(psi, reduced).norm:.1e}   "
        f"full |C| = {sep3q.c_vector(psi).norm:.3f}   Schmidt check: {sep3q.brute_force_product_check(psi).value}"
    )
