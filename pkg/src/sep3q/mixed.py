"""Entanglement certificate for three-qubit mixed states.

For a density matrix ``rho = Phi M Phi^H`` restricted to its support, the
operators ``s^a`` are carried into the support as the complex symmetric
matrices ``A^a = M^(1/2) Phi^T s^a Phi M^(1/2)`` (transpose, not adjoint).
For every unit vector ``z``, the quantity

    g(z) = s_1(T) - sum_{i>1} s_i(T),   T = sum_a z_a A^a

(``s_i`` the descending singular values) lower-bounds the average ``|C|``
of every pure-state decomposition of ``rho``. A positive ``g`` at any
``z`` therefore certifies entanglement; the certificate is
``max(0, max_z g(z))``, estimated here by sampling plus local ascent.
A zero certificate proves nothing.
"""

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import minimize

from .errors import WrongRank
from .pure import OperatorVariant, Verdict, build_s_operators
from .spectral import gap_scores
from .states import DensityMatrix, eig_hermitian

__all__ = [
    "ZMode",
    "SearchConfig",
    "AMatrixSet",
    "SearchResult",
    "build_a_matrices",
    "score",
    "score_batch",
    "optimal_z_rank1",
    "sample_block",
    "random_search",
    "refine",
    "c_mixed",
    "resolve_threads",
    "BLOCK_SIZE",
    "VERDICT_TOL",
    "NOISE_FLOOR",
]

BLOCK_SIZE = 4096
VERDICT_TOL = 1e-6
# positive gap scores below this are SVD rounding, not evidence
NOISE_FLOOR = 1e-12
THREADS_ENV = "SEP3Q_THREADS"

_SAMPLE_STREAM = 0


class ZMode(str, Enum):
    COMPLEX = "complex"
    REAL = "real"  # nonnegative real weights


@dataclass(frozen=True)
class SearchConfig:
    samples: int = 100_000
    seed: int = 0
    z_mode: ZMode = ZMode.COMPLEX
    refine_iters: int = 200
    operator_variant: OperatorVariant = OperatorVariant.FULL9
    rank_tol: float = 1e-12

    def __post_init__(self):
        object.__setattr__(self, "z_mode", ZMode(self.z_mode))
        object.__setattr__(self, "operator_variant", OperatorVariant(self.operator_variant))
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be >= 0")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass(frozen=True, eq=False)
class AMatrixSet:
    matrices: np.ndarray  # (count, r, r)

    @property
    def rank(self):
        return self.matrices.shape[1]

    @property
    def count(self):
        return self.matrices.shape[0]


@dataclass(frozen=True, eq=False)
class SearchResult:
    certificate: float
    best_score: float
    best_z: np.ndarray
    samples_evaluated: int
    refinement_gain: float
    sampled_score: float
    rank: int
    verdict_tol: float = VERDICT_TOL
    config: SearchConfig = field(default_factory=SearchConfig)

    @property
    def verdict(self):
        if self.certificate > self.verdict_tol:
            return Verdict.ENTANGLED
        return Verdict.INCONCLUSIVE


def resolve_threads(threads=None):
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        threads = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(threads))


def build_a_matrices(rho, ops=None, rank_tol=1e-12):
    if ops is None:
        ops = build_s_operators()
    eig = eig_hermitian(rho, rank_tol=rank_tol)
    phi = eig.support
    sq = np.sqrt(eig.eigenvalues[: eig.rank])
    a = np.einsum("mi,amn,nj->aij", phi, ops.matrices, phi)
    a = sq[None, :, None] * a * sq[None, None, :]
    a.setflags(write=False)
    return AMatrixSet(a)


def score_batch(zs, a):
    """Gap scores for a stack of weight vectors, shape (N, count) -> (N,)."""
    t = np.einsum("na,aij->nij", zs, a.matrices)
    return gap_scores(t)


def score(z, a):
    return float(score_batch(np.asarray(z, dtype=complex)[None, :], a)[0])


def optimal_z_rank1(a):
    """Closed-form maximizer when the state is pure (rank one)."""
    if a.rank != 1:
        raise WrongRank(f"closed form needs rank 1, got rank {a.rank}")
    c = a.matrices[:, 0, 0]
    norm = np.linalg.norm(c)
    z = np.zeros(a.count, dtype=complex)
    if norm == 0:
        z[0] = 1.0
        return z
    return c.conj() / norm


def _normalize_rows(z):
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


def sample_block(seed, block, count, z_mode, size=BLOCK_SIZE):
    """Unit weight vectors ``block*size ... (block+1)*size - 1``.

    Sample ``i`` depends only on ``(seed, i)`` for a fixed block size.
    """
    rng = np.random.default_rng([seed, _SAMPLE_STREAM, block])
    if ZMode(z_mode) is ZMode.COMPLEX:
        g = rng.standard_normal((size, 2 * count))
        z = g[:, :count] + 1j * g[:, count:]
    else:
        z = np.abs(rng.standard_normal((size, count))).astype(complex)
    return _normalize_rows(z)


def _best(scores):
    i = int(np.argmax(scores))
    return i, float(scores[i])


def _search_block(a, cfg, block):
    n = min(BLOCK_SIZE, cfg.samples - block * BLOCK_SIZE)
    z = sample_block(cfg.seed, block, a.count, cfg.z_mode)[:n]
    i, s = _best(score_batch(z, a))
    return s, z[i]


def random_search(a, cfg=SearchConfig(), threads=None, verdict_tol=VERDICT_TOL):
    """Maximize the gap score by sampling, then polish the best candidate.

    The candidate pool is the basis vectors, the rank-one closed form (when
    applicable) and ``cfg.samples`` random unit vectors. The result does not
    depend on ``threads``.
    """
    basis = np.eye(a.count, dtype=complex)
    pool = [basis]
    if a.rank == 1:
        pool.append(optimal_z_rank1(a)[None, :])
    fixed = np.concatenate(pool)
    i, best = _best(score_batch(fixed, a))
    best_z = fixed[i]

    nblocks = -(-cfg.samples // BLOCK_SIZE)
    nthreads = min(resolve_threads(threads), nblocks)
    if nthreads > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as ex:
            per_block = list(ex.map(lambda b: _search_block(a, cfg, b), range(nblocks)))
    else:
        per_block = [_search_block(a, cfg, b) for b in range(nblocks)]
    # strict '>' in index order: ties go to the earliest candidate
    for s, z in per_block:
        if s > best:
            best, best_z = s, z

    sampled = best
    if cfg.refine_iters > 0:
        best_z = refine(best_z, a, cfg.refine_iters, z_mode=cfg.z_mode)
        best = max(score(best_z, a), sampled)
    return SearchResult(
        certificate=best if best > NOISE_FLOOR else 0.0,
        best_score=best,
        best_z=best_z,
        samples_evaluated=len(fixed) + cfg.samples,
        refinement_gain=best - sampled,
        sampled_score=sampled,
        rank=a.rank,
        verdict_tol=verdict_tol,
        config=cfg,
    )


def _gap_and_gradient(z, a):
    """Gap score at unit ``z`` and its gradient ``g`` with
    ``d score = Re(sum_a conj(g_a) dz_a)``.

    At repeated singular values this is one element of the subdifferential.
    """
    t = np.tensordot(z, a.matrices, axes=1)
    u, s, vh = np.linalg.svd(t)
    sign = -np.ones(s.size)
    sign[0] = 1.0
    d = np.einsum("mi,amn,in->ai", u.conj(), a.matrices, vh.conj())
    return s[0] - s[1:].sum(), np.conj(d @ sign)


def refine(z0, a, iters, z_mode=ZMode.COMPLEX):
    """Local ascent of the gap score from ``z0``, at most ``iters`` BFGS steps.

    The unit-sphere constraint is handled by optimizing an unnormalized
    vector ``x`` and scoring ``x / |x|``. In ``real`` mode only the
    magnitudes move and the phases of ``z0`` are kept. The returned point
    never scores below ``z0``.
    """
    z0 = np.asarray(z0, dtype=complex)
    z0 = z0 / np.linalg.norm(z0)
    if iters <= 0:
        return z0
    n = z0.size
    if ZMode(z_mode) is ZMode.REAL:
        phase = np.exp(1j * np.angle(z0))

        def unpack(x):
            return phase * np.abs(x)

        def pullback(g, x):
            return np.real(np.conj(g) * phase) * np.sign(x)

        x0 = np.abs(z0)
    else:

        def unpack(x):
            return x[:n] + 1j * x[n:]

        def pullback(g, x):
            return np.concatenate([g.real, g.imag])

        x0 = np.concatenate([z0.real, z0.imag])

    def objective(x):
        nx = np.linalg.norm(x)
        if nx == 0:
            return 0.0, np.zeros_like(x)
        w = unpack(x) / nx
        f, g = _gap_and_gradient(w, a)
        gx = pullback(g, x)
        xu = x / nx
        gx = (gx - xu * (gx @ xu)) / nx
        return -f, -gx

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = minimize(objective, x0, jac=True, method="BFGS", options={"maxiter": iters, "gtol": 1e-12})
    z = unpack(res.x)
    nz = np.linalg.norm(z)
    if not np.isfinite(nz) or nz == 0:
        return z0
    z = z / nz
    return z if score(z, a) > score(z0, a) else z0


def c_mixed(rho, cfg=SearchConfig(), threads=None, verdict_tol=VERDICT_TOL):
    """Entanglement certificate of a density matrix.

    Parameters
    ----------
    rho : DensityMatrix
    cfg : SearchConfig
    threads : int, optional
        Worker threads for sampling; defaults to ``$SEP3Q_THREADS`` or the
        CPU count. Has no effect on the result.
    verdict_tol : float
        Certificates above this value are reported as entangled; anything
        else is inconclusive.

    Returns
    -------
    SearchResult
    """
    if not isinstance(rho, DensityMatrix):
        raise TypeError("c_mixed expects a DensityMatrix; use validate_density first")
    a = build_a_matrices(rho, build_s_operators(cfg.operator_variant), cfg.rank_tol)
    return random_search(a, cfg, threads=threads, verdict_tol=verdict_tol)
