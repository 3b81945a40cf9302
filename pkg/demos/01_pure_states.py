"""
Pure three-qubit states: the C-vector test
==========================================

A pure state is fully separable exactly when its C-vector vanishes. This
script evaluates the vector for a few reference states and shows the two
equivalent readings: nine bilinear forms, or six minor conditions on the
2x2x2 coefficient tensor.
"""

import numpy as np

import sep3q

# The C-vector of GHZ lives entirely on the three diagonal-plane forms,
# W on the face forms.
for name, psi in [("GHZ", sep3q.ghz()), ("W", sep3q.w()), ("|000>", sep3q.product((1, 0), (1, 0), (1, 0)))]:
    verdict, cv = sep3q.is_fully_separable_pure(psi)
    print(f"{name:6s} |C| = {cv.norm:.6f}  {verdict.value}")
    print("       |C^a| =", np.round(np.abs(cv.components), 4))
    print("       minor residuals =", np.round(sep3q.minor_residuals(psi).values, 4))

# A product of three arbitrary qubits always gives |C| = 0 to rounding.
rng = np.random.default_rng(0)
qubits = [rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(3)]
print("\nrandom product: |C| =", sep3q.c_vector(sep3q.product(*qubits)).norm)

# Appending |0> to a two-qubit state turns |C| into the Wootters concurrence.
phi = np.array([0.6, 0.1j, -0.3, 0.5])
phi /= np.linalg.norm(phi)
psi = sep3q.pure_from_amplitudes(np.kron(phi, [1, 0]))
print("two-qubit embedding: |C| =", sep3q.c_vector(psi).norm, " concurrence =", sep3q.wootters_concurrence_pure(phi))
