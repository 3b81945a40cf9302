"""Reference states: GHZ, W, products, the SHIFTS UPB and its bound
entangled complement, the Dur-Cirac-Tarrach family, and random ensembles."""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import InvalidParams, ZeroVector
from .states import (
    TOL_TRACE,
    DensityMatrix,
    PureState,
    pure_from_amplitudes,
    validate_density,
)

__all__ = [
    "ghz",
    "w",
    "basis_state",
    "product",
    "shifts_upb",
    "shifts_complement",
    "DCTParams",
    "dct_state",
    "random_pure",
    "random_product_pure",
    "random_separable_mixed",
    "random_density",
    "maximally_mixed",
]

_S2 = np.sqrt(2.0)
KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
PLUS = np.array([1, 1], dtype=complex) / _S2
MINUS = np.array([1, -1], dtype=complex) / _S2


def ghz():
    return pure_from_amplitudes([1, 0, 0, 0, 0, 0, 0, 1])


def w():
    return pure_from_amplitudes([0, 1, 1, 0, 1, 0, 0, 0])


def basis_state(i, j, k):
    v = np.zeros(8, dtype=complex)
    v[4 * i + 2 * j + k] = 1
    return PureState(v)


def _qubit(v):
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape != (2,):
        raise InvalidParams(f"single-qubit factor needs 2 amplitudes, got {v.size}")
    n = np.linalg.norm(v)
    if n < 1e-14:
        raise ZeroVector("single-qubit factor is zero")
    return v / n


def product(u, v, t):
    """Product state with amplitudes ``u_i v_j t_k``; factors are normalized first."""
    return pure_from_amplitudes(reduce(np.kron, (_qubit(u), _qubit(v), _qubit(t))), normalize=False)


def shifts_upb():
    """The four SHIFTS product states |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->."""
    return (
        product(KET0, KET1, PLUS),
        product(KET1, PLUS, KET0),
        product(PLUS, KET0, KET1),
        product(MINUS, MINUS, MINUS),
    )


def shifts_complement():
    """Normalized projector onto the complement of the SHIFTS UPB span.

    PPT across every cut, yet entangled.
    """
    proj = sum(np.outer(p.amp, p.amp.conj()) for p in shifts_upb())
    return validate_density((np.eye(8) - proj) / 4)


@dataclass(frozen=True)
class DCTParams:
    a: float
    b: float
    c: float
    d: float
    e: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d, self.e)
        if not all(np.isfinite(vals)):
            raise InvalidParams("DCT parameters must be finite")
        neg = [n for n, v in zip("abcde", vals) if v < 0]
        if neg:
            raise InvalidParams(f"DCT parameters must be nonnegative: {', '.join(neg)} < 0")
        tr = self.a + self.b + 2 * (self.c + self.d + self.e)
        if abs(tr - 1) > TOL_TRACE:
            raise InvalidParams(f"a + b + 2(c + d + e) must equal 1, got {tr:.12g}")


def dct_state(p):
    """Dur-Cirac-Tarrach state: GHZ-diagonal coherence in the |000>,|111> corner."""
    m = np.diag([(p.a + p.b) / 2, p.c, p.d, p.e, p.e, p.d, p.c, (p.a + p.b) / 2]).astype(complex)
    m[0, 7] = m[7, 0] = (p.a - p.b) / 2
    return validate_density(m)


def maximally_mixed():
    return DensityMatrix(np.eye(8, dtype=complex) / 8)


def _rng(seed):
    return np.random.default_rng(seed)


def _complex_gauss(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure(seed):
    """Haar-random pure state."""
    return pure_from_amplitudes(_complex_gauss(_rng(seed), 8))


def _random_product_amp(rng):
    f = _complex_gauss(rng, (3, 2))
    f /= np.linalg.norm(f, axis=1, keepdims=True)
    return reduce(np.kron, f)


def random_product_pure(seed):
    return pure_from_amplitudes(_random_product_amp(_rng(seed)))


def random_separable_mixed(seed, k):
    """Dirichlet-weighted mixture of ``k`` random product projectors."""
    if not 1 <= k <= 16:
        raise InvalidParams(f"k must be in [1, 16], got {k}")
    rng = _rng(seed)
    weights = rng.dirichlet(np.ones(k))
    m = np.zeros((8, 8), dtype=complex)
    for wt in weights:
        v = _random_product_amp(rng)
        m += wt * np.outer(v, v.conj())
    return validate_density(m)


def random_density(seed):
    """``G G^H / tr`` for a complex Gaussian 8x8 ``G``."""
    g = _complex_gauss(_rng(seed), (8, 8))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return validate_density(0.5 * (m + m.conj().T))
