"""Small dense decompositions: Hermitian eigenproblems and singular values.

Everything here operates on matrices of dimension at most 8, so LAPACK
(through numpy) is used directly. The batched variants exist because the
mixed-state search evaluates singular spectra of ~1e5 tiny matrices.
"""

import numpy as np

from .errors import ConvergenceFailure, NonFinite, ShapeError

__all__ = [
    "hermitian_eigen",
    "singular_values",
    "batched_singular_values",
    "gap_scores",
]


def _check_finite(m):
    if not np.all(np.isfinite(m)):
        raise NonFinite("matrix contains NaN or Inf entries")


def hermitian_eigen(m):
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as ``(m + m^H) / 2`` before solving.

    Parameters
    ----------
    m : array_like, shape (n, n)

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Real, sorted in descending order.
    eigenvectors : ndarray, shape (n, n)
        Unitary; column ``i`` belongs to ``eigenvalues[i]``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    _check_finite(m)
    h = 0.5 * (m + m.conj().T)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"Hermitian eigensolver did not converge: {exc}") from exc
    return w[::-1].copy(), v[:, ::-1].copy()


def singular_values(m):
    """Singular values of a small complex matrix, descending."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ShapeError(f"expected a matrix, got shape {m.shape}")
    _check_finite(m)
    if min(m.shape) == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"SVD did not converge: {exc}") from exc


def batched_singular_values(stack):
    """Singular values for a stack of square matrices, shape (N, r, r) -> (N, r)."""
    stack = np.asarray(stack)
    if stack.shape[-1] == 1 and stack.shape[-2] == 1:
        # 1x1 blocks: the singular value is the modulus; skips LAPACK for rank-1 states
        return np.abs(stack[..., 0])
    try:
        sv = np.linalg.svd(stack, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"batched SVD did not converge: {exc}") from exc
    if not np.all(np.isfinite(sv)):
        raise ConvergenceFailure("batched SVD produced non-finite values")
    return sv


def gap_scores(stack):
    """``s_1 - sum_{i>1} s_i`` for every matrix in a stack."""
    sv = batched_singular_values(stack)
    return sv[..., 0] - sv[..., 1:].sum(axis=-1)
