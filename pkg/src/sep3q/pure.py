"""Full separability of three-qubit pure states.

A pure state is fully separable iff every 2x2 minor of its coefficient
tensor on the six faces and the three diagonal planes of the cube vanishes.
The minors are packed into nine bilinear forms ``C^a = psi^T s^a psi``
with constant symmetric 8x8 matrices ``s^a``; the state is a product iff
the vector ``C`` is zero.
"""

from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from .states import PureState

__all__ = [
    "OperatorVariant",
    "SOperatorSet",
    "CVector",
    "MinorResiduals",
    "Verdict",
    "build_s_operators",
    "kron_s_operators",
    "c_vector",
    "minor_residuals",
    "is_fully_separable_pure",
    "brute_force_product_check",
    "TOL_SEP",
]

TOL_SEP = 1e-8


class OperatorVariant(str, Enum):
    FULL9 = "full"
    REDUCED = "reduced"


class Verdict(str, Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"
    INCONCLUSIVE = "inconclusive"


# Nonzero (row, col, value) entries of s^1 ... s^9 in big-endian order.
_FULL9_ENTRIES = (
    ((0, 6, 1), (2, 4, -1), (4, 2, -1), (6, 0, 1)),
    ((1, 7, 1), (3, 5, -1), (5, 3, -1), (7, 1, 1)),
    ((0, 5, 1), (1, 4, -1), (4, 1, -1), (5, 0, 1)),
    ((2, 7, 1), (3, 6, -1), (6, 3, -1), (7, 2, 1)),
    ((0, 3, 1), (1, 2, -1), (2, 1, -1), (3, 0, 1)),
    ((4, 7, 1), (5, 6, -1), (6, 5, -1), (7, 4, 1)),
    ((0, 7, 1), (1, 6, -1), (2, 5, -1), (3, 4, 1), (4, 3, 1), (5, 2, -1), (6, 1, -1), (7, 0, 1)),
    ((0, 7, 1), (1, 6, -1), (2, 5, 1), (3, 4, -1), (4, 3, -1), (5, 2, 1), (6, 1, -1), (7, 0, 1)),
    ((0, 7, 1), (1, 6, 1), (2, 5, -1), (3, 4, -1), (4, 3, -1), (5, 2, -1), (6, 1, 1), (7, 0, 1)),
)

# S^1 ... S^3, which stand in for s^1 ... s^6 in the reduced set.
_REDUCED_ENTRIES = (
    ((0, 6, 1), (1, 7, 1j), (2, 4, -1), (3, 5, -1j), (4, 2, -1), (5, 3, -1j), (6, 0, 1), (7, 1, 1j)),
    ((0, 5, 1), (1, 4, -1), (2, 7, 1j), (3, 6, -1j), (4, 1, -1), (5, 0, 1), (6, 3, -1j), (7, 2, 1j)),
    ((0, 3, 1), (1, 2, -1), (2, 1, -1), (3, 0, 1), (4, 7, 1j), (5, 6, -1j), (6, 5, -1j), (7, 4, 1j)),
)


def _materialize(tables):
    out = np.zeros((len(tables), 8, 8), dtype=complex)
    for a, entries in enumerate(tables):
        for r, c, v in entries:
            out[a, r, c] = v
    out.setflags(write=False)
    return out


_FULL9 = _materialize(_FULL9_ENTRIES)
_REDUCED = _materialize(_REDUCED_ENTRIES + _FULL9_ENTRIES[6:])


@dataclass(frozen=True, eq=False)
class SOperatorSet:
    variant: OperatorVariant
    matrices: np.ndarray  # (count, 8, 8)

    @property
    def count(self):
        return self.matrices.shape[0]

    def __len__(self):
        return self.count

    def __getitem__(self, alpha):
        return self.matrices[alpha]


def build_s_operators(variant=OperatorVariant.FULL9):
    """Return the constant operator set for ``variant`` ("full" or "reduced")."""
    variant = OperatorVariant(variant)
    return SOperatorSet(variant, _FULL9 if variant is OperatorVariant.FULL9 else _REDUCED)


def kron_s_operators(variant=OperatorVariant.FULL9):
    """Regenerate the operator matrices from their Kronecker-product definition.

    Used to cross-check the literal tables above.
    """
    sy = np.array([[0, -1j], [1j, 0]])
    i1 = np.diag([1, 0]).astype(complex)
    i2 = np.diag([0, 1]).astype(complex)
    iv = np.array([[0, 1], [1, 0]], dtype=complex)
    it = np.diag([1, 1j])

    def k(*fs):
        return -reduce(np.kron, fs)

    tail = [k(iv, sy, sy), k(sy, iv, sy), k(sy, sy, iv)]
    if OperatorVariant(variant) is OperatorVariant.FULL9:
        head = [k(sy, sy, i1), k(sy, sy, i2), k(sy, i1, sy), k(sy, i2, sy), k(i1, sy, sy), k(i2, sy, sy)]
    else:
        head = [k(sy, sy, it), k(sy, it, sy), k(it, sy, sy)]
    return np.array(head + tail)


@dataclass(frozen=True, eq=False)
class CVector:
    components: np.ndarray

    @property
    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.components) ** 2)))


@dataclass(frozen=True)
class MinorResiduals:
    """Residuals of the six minor conditions; the first three are face
    conditions, the last three diagonal-plane conditions."""

    values: tuple

    def __iter__(self):
        return iter(self.values)

    def max(self):
        return max(self.values)


def c_vector(psi, ops=None):
    """Bilinear forms ``C^a = sum_mn amp_m s^a_mn amp_n`` (no conjugation)."""
    if ops is None:
        ops = build_s_operators()
    a = psi.amp if isinstance(psi, PureState) else np.asarray(psi, dtype=complex)
    comps = np.einsum("m,amn,n->a", a, ops.matrices, a)
    return CVector(comps)


def minor_residuals(psi):
    a = psi.tensor
    faces = (
        sum(abs(a[i, 0, 0] * a[i, 1, 1] - a[i, 0, 1] * a[i, 1, 0]) for i in (0, 1)),
        sum(abs(a[0, i, 0] * a[1, i, 1] - a[0, i, 1] * a[1, i, 0]) for i in (0, 1)),
        sum(abs(a[0, 0, i] * a[1, 1, i] - a[0, 1, i] * a[1, 0, i]) for i in (0, 1)),
    )
    diagonals = (
        abs(sum(a[0, i, 0] * a[1, 1 - i, 1] - a[0, 1 - i, 1] * a[1, i, 0] for i in (0, 1))),
        abs(sum(a[i, 0, 0] * a[1 - i, 1, 1] - a[1 - i, 0, 1] * a[i, 1, 0] for i in (0, 1))),
        abs(sum(a[0, 0, i] * a[1, 1, 1 - i] - a[0, 1, 1 - i] * a[1, 0, i] for i in (0, 1))),
    )
    return MinorResiduals(tuple(float(x) for x in faces + diagonals))


def is_fully_separable_pure(psi, tol_sep=TOL_SEP):
    """Decide full separability of a pure state.

    Always uses the nine-operator set.

    Returns
    -------
    verdict : Verdict
        ``SEPARABLE`` iff ``|C(psi)| < tol_sep``.
    cvec : CVector
    """
    cvec = c_vector(psi, build_s_operators(OperatorVariant.FULL9))
    verdict = Verdict.SEPARABLE if cvec.norm < tol_sep else Verdict.ENTANGLED
    return verdict, cvec


def brute_force_product_check(psi, tol=TOL_SEP):
    """Product test via successive Schmidt decompositions (A|BC, then B|C).

    Independent of the operator machinery; used as an oracle.
    """
    a = psi.amp if isinstance(psi, PureState) else np.asarray(psi, dtype=complex)
    u, s, vh = np.linalg.svd(a.reshape(2, 4))
    if s[1] >= tol:
        return Verdict.ENTANGLED
    bc = vh[0].reshape(2, 2)
    s_bc = np.linalg.svd(bc, compute_uv=False)
    return Verdict.SEPARABLE if s_bc[1] < tol else Verdict.ENTANGLED
