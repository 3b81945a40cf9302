"""Cross-checks that do not use the C-vector machinery."""

from dataclasses import dataclass

import numpy as np

from .errors import NotNormalized, ShapeError
from .spectral import hermitian_eigen
from .states import TOL_NORM, TOL_PSD, DensityMatrix

__all__ = ["SUBSYSTEMS", "partial_transpose", "PptReport", "ppt_report", "wootters_concurrence_pure"]

SUBSYSTEMS = ("A", "B", "C")


def partial_transpose(rho, subsystem):
    """Transpose the indices of one qubit (``"A"``, ``"B"`` or ``"C"``)."""
    m = rho.m if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    q = SUBSYSTEMS.index(subsystem.upper())
    t = m.reshape(2, 2, 2, 2, 2, 2)
    # axes 0-2 are row qubits, 3-5 column qubits
    return np.swapaxes(t, q, q + 3).reshape(8, 8)


@dataclass(frozen=True)
class PptReport:
    min_eigenvalues: dict

    @property
    def flags(self):
        return {s: bool(v >= -TOL_PSD) for s, v in self.min_eigenvalues.items()}

    @property
    def all_ppt(self):
        return all(self.flags.values())


def ppt_report(rho):
    mins = {}
    for s in SUBSYSTEMS:
        w, _ = hermitian_eigen(partial_transpose(rho, s))
        mins[s] = float(w[-1])
    return PptReport(mins)


def wootters_concurrence_pure(phi):
    """Concurrence ``2|a00 a11 - a01 a10|`` of a normalized two-qubit pure state."""
    a = np.asarray(phi, dtype=complex).reshape(-1)
    if a.shape != (4,):
        raise ShapeError(f"expected 4 amplitudes, got {a.size}")
    n = np.linalg.norm(a)
    if abs(n - 1) > TOL_NORM:
        raise NotNormalized(f"state norm is {n!r}, expected 1")
    return float(2 * abs(a[0] * a[3] - a[1] * a[2]))
