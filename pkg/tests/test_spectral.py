import numpy as np
import pytest

from oracles import jacobi_eigvalsh, jacobi_singular_values
from sep3q import library
from sep3q.errors import NonFinite
from sep3q.spectral import batched_singular_values, gap_scores, hermitian_eigen, singular_values


def test_singular_values_examples():
    np.testing.assert_allclose(singular_values(np.eye(3)), [1, 1, 1], atol=1e-15)
    np.testing.assert_allclose(singular_values(np.diag([3, -4j])), [4, 3], atol=1e-15)
    rng = np.random.default_rng(1)
    u = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    v = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    sv = singular_values(np.outer(u / np.linalg.norm(u), v / np.linalg.norm(v)))
    np.testing.assert_allclose(sv, [1, 0, 0, 0, 0], atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_singular_values_against_jacobi(n):
    rng = np.random.default_rng(n)
    for _ in range(50):
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        sv = singular_values(m)
        assert np.all(np.diff(sv) <= 0)
        np.testing.assert_allclose(sv, jacobi_singular_values(m), atol=1e-12 * sv[0])
        assert abs(np.sum(sv**2) - np.linalg.norm(m) ** 2) < 1e-10 * np.linalg.norm(m) ** 2
        np.testing.assert_allclose(singular_values(m.T), sv, atol=1e-12 * sv[0])
        np.testing.assert_allclose(singular_values(m.conj().T), sv, atol=1e-12 * sv[0])


def test_complex_symmetric_transpose_invariance():
    rng = np.random.default_rng(7)
    for _ in range(100):
        g = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        m = g + g.T
        np.testing.assert_allclose(singular_values(m), singular_values(m.T), atol=1e-12)


def test_batched_matches_single():
    rng = np.random.default_rng(3)
    stack = rng.standard_normal((20, 4, 4)) + 1j * rng.standard_normal((20, 4, 4))
    out = batched_singular_values(stack)
    for m, sv in zip(stack, out):
        np.testing.assert_array_equal(sv, singular_values(m))
    scalars = stack[:, :1, :1]
    np.testing.assert_allclose(gap_scores(scalars), np.abs(scalars[:, 0, 0]), atol=0)


def test_hermitian_eigen_examples():
    w, v = hermitian_eigen(np.diag([1.0, 2.0, 3.0]))
    np.testing.assert_allclose(w, [3, 2, 1])
    np.testing.assert_allclose(np.abs(v), np.fliplr(np.eye(3)))

    w, v = hermitian_eigen([[0, 1], [1, 0]])
    np.testing.assert_allclose(w, [1, -1], atol=1e-15)
    np.testing.assert_allclose(np.abs(v), np.full((2, 2), 1 / np.sqrt(2)))
    assert abs(v[0, 0] / v[1, 0] - 1) < 1e-12  # (1, 1) up to phase
    assert abs(v[0, 1] / v[1, 1] + 1) < 1e-12  # (1, -1) up to phase


def test_hermitian_eigen_shifts_complement():
    w, _ = hermitian_eigen(library.shifts_complement().m)
    np.testing.assert_allclose(w, [0.25] * 4 + [0] * 4, atol=1e-14)


def test_hermitian_eigen_random():
    rng = np.random.default_rng(11)
    for trial in range(1000):
        n = 1 + trial % 8
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = g + g.conj().T
        w, v = hermitian_eigen(h)
        assert np.all(np.diff(w) <= 0)
        assert np.abs(v.conj().T @ v - np.eye(n)).max() < 1e-10
        assert np.abs((v * w) @ v.conj().T - h).max() < 1e-10
        if trial % 50 == 0:
            np.testing.assert_allclose(w, jacobi_eigvalsh(h), atol=1e-10)


def test_rejects_non_finite():
    with pytest.raises(NonFinite):
        singular_values(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(NonFinite):
        hermitian_eigen(np.array([[np.inf, 0], [0, 1]]))
