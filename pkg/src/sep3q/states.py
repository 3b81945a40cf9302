"""Three-qubit pure states and density matrices.

Amplitudes use big-endian qubit order: flat index ``4*i + 2*j + k`` holds
the coefficient of ``|i>_A |j>_B |k>_C``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    NonFinite,
    NotHermitian,
    NotNormalized,
    NotPositive,
    ShapeError,
    TraceNotOne,
    ZeroVector,
)
from .spectral import hermitian_eigen

__all__ = [
    "TOL_NORM",
    "TOL_HERMITIAN",
    "TOL_TRACE",
    "TOL_PSD",
    "PureState",
    "DensityMatrix",
    "EigDecomposition",
    "pure_from_amplitudes",
    "density_from_pure",
    "validate_density",
    "eig_hermitian",
    "flat_index",
]

TOL_NORM = 1e-10
TOL_HERMITIAN = 1e-12
TOL_TRACE = 1e-10
TOL_PSD = 1e-10
ZERO_AMPLITUDE = 1e-14


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def flat_index(i, j, k):
    return 4 * i + 2 * j + k


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm three-qubit state vector.

    Build instances with :func:`pure_from_amplitudes`; the constructor does
    not validate.
    """

    amp: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amp", _frozen(self.amp))

    @property
    def tensor(self):
        """Amplitudes as the 2x2x2 coefficient tensor ``a[i, j, k]``."""
        return self.amp.reshape(2, 2, 2)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amp, dtype=dtype)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated 8x8 density matrix. Build with :func:`validate_density`."""

    m: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "m", _frozen(self.m))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.m, dtype=dtype)


@dataclass(frozen=True, eq=False)
class EigDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    rank: int

    @property
    def support(self):
        """Eigenvectors with nonzero eigenvalue, shape (8, rank)."""
        return self.eigenvectors[:, : self.rank]

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def pure_from_amplitudes(raw, normalize=True):
    """Build a :class:`PureState` from eight complex amplitudes.

    Parameters
    ----------
    raw : array_like of 8 complex numbers
    normalize : bool
        Divide by the Euclidean norm. When False the input must already have
        unit norm to within ``TOL_NORM``.
    """
    v = np.asarray(raw, dtype=complex).reshape(-1)
    if v.shape != (8,):
        raise ShapeError(f"expected 8 amplitudes, got {v.size}")
    if not np.all(np.isfinite(v)):
        raise NonFinite("amplitudes must be finite")
    if np.all(np.abs(v) < ZERO_AMPLITUDE):
        raise ZeroVector("all amplitudes vanish")
    norm = np.linalg.norm(v)
    if normalize:
        v = v / norm
    elif abs(norm - 1.0) > TOL_NORM:
        raise NotNormalized(f"state norm is {norm!r}, expected 1")
    return PureState(v)


def density_from_pure(psi):
    a = psi.amp
    return DensityMatrix(np.outer(a, a.conj()))


def validate_density(m):
    """Check the density-matrix invariants and wrap ``m``.

    Raises
    ------
    NotHermitian, TraceNotOne, NotPositive
        Naming the first violated invariant.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (8, 8):
        raise ShapeError(f"expected an 8x8 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFinite("matrix entries must be finite")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > TOL_HERMITIAN:
        raise NotHermitian(f"matrix is not Hermitian (max |m - m^H| = {dev:.3e})")
    tr = np.trace(m)
    if abs(tr - 1.0) > TOL_TRACE:
        raise TraceNotOne(f"trace is {tr.real:.12g}{tr.imag:+.3g}j, expected 1")
    w, _ = hermitian_eigen(m)
    if w[-1] < -TOL_PSD:
        raise NotPositive(f"matrix has negative eigenvalue {w[-1]:.6g}", eigenvalue=float(w[-1]))
    return DensityMatrix(0.5 * (m + m.conj().T))


def eig_hermitian(rho, rank_tol=1e-12):
    """Descending eigendecomposition of a density matrix with rank truncation.

    Eigenvalues at or below ``rank_tol * trace`` are set to zero and do not
    count toward the rank.
    """
    m = rho.m if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    w, v = hermitian_eigen(m)
    thresh = rank_tol * max(np.trace(m).real, 0.0)
    w = np.where(w > thresh, w, 0.0)
    rank = int(np.count_nonzero(w))
    w.setflags(write=False)
    v.setflags(write=False)
    return EigDecomposition(w, v, rank)
