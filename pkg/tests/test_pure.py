import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import least_squares

from oracles import bilinear, minor_c_vector, random_unit
from sep3q import library
from sep3q.diagnostics import wootters_concurrence_pure
from sep3q.pure import (
    OperatorVariant,
    Verdict,
    brute_force_product_check,
    build_s_operators,
    c_vector,
    is_fully_separable_pure,
    kron_s_operators,
    minor_residuals,
)
from sep3q.states import pure_from_amplitudes

SEP, ENT = Verdict.SEPARABLE, Verdict.ENTANGLED


@pytest.mark.parametrize("variant", ["full", "reduced"])
def test_tables_match_kronecker_definition(variant):
    ops = build_s_operators(variant)
    np.testing.assert_array_equal(ops.matrices, kron_s_operators(variant))
    assert ops.count == (9 if variant == "full" else 6)
    for s in ops.matrices:
        np.testing.assert_array_equal(s, s.T)


def test_operator_entries():
    full = build_s_operators()
    assert full[8][0, 7] == 1
    assert bilinear(library.ghz().amp, full[0]) == 0
    with pytest.raises(ValueError):
        full.matrices[0, 0, 0] = 5


def test_c_vector_examples():
    assert c_vector(library.basis_state(0, 0, 0)).norm == 0

    cv = c_vector(library.ghz())
    np.testing.assert_allclose(cv.components, minor_c_vector(library.ghz().amp), atol=1e-15)
    np.testing.assert_allclose(np.abs(cv.components), [0] * 6 + [1] * 3, atol=1e-15)
    assert cv.norm == pytest.approx(np.sqrt(3), abs=1e-14)

    cv = c_vector(library.w())
    np.testing.assert_allclose(cv.components, minor_c_vector(library.w().amp), atol=1e-15)
    np.testing.assert_allclose(np.abs(cv.components)[[0, 2, 4]], 2 / 3, atol=1e-15)
    np.testing.assert_allclose(cv.components[6:], 0, atol=1e-15)
    assert cv.norm == pytest.approx(2 / np.sqrt(3), abs=1e-14)


def test_c_vector_matches_explicit_bilinear_forms():
    rng = np.random.default_rng(5)
    ops = build_s_operators()
    for _ in range(20):
        a = random_unit(rng, 8)
        comps = c_vector(pure_from_amplitudes(a)).components
        np.testing.assert_allclose(comps, [bilinear(a, s) for s in ops.matrices], atol=1e-14)
        np.testing.assert_allclose(comps, minor_c_vector(a), atol=1e-14)


def test_minor_residual_examples():
    rng = np.random.default_rng(2)
    for _ in range(20):
        psi = library.product(*(random_unit(rng, 2) for _ in range(3)))
        assert minor_residuals(psi).max() < 1e-12
    res = minor_residuals(library.ghz())
    np.testing.assert_allclose(res.values, [0, 0, 0, 0.5, 0.5, 0.5], atol=1e-15)
    res = minor_residuals(library.w())
    np.testing.assert_allclose(res.values, [1 / 3] * 3 + [0] * 3, atol=1e-15)
    assert all(r >= 0 for r in res)


def test_verdict_examples():
    assert is_fully_separable_pure(library.basis_state(0, 0, 0))[0] is SEP
    verdict, cv = is_fully_separable_pure(library.ghz())
    assert verdict is ENT and cv.norm == pytest.approx(np.sqrt(3))
    plus = pure_from_amplitudes(np.ones(8))
    assert is_fully_separable_pure(plus)[0] is SEP


def test_brute_force_examples():
    assert brute_force_product_check(library.basis_state(0, 0, 0)) is SEP
    assert brute_force_product_check(library.ghz()) is ENT
    assert brute_force_product_check(library.w()) is ENT
    # entangled only across B|C
    bc_bell = np.zeros(8)
    bc_bell[[0, 3]] = 1
    assert brute_force_product_check(pure_from_amplitudes(bc_bell)) is ENT


def test_oracle_equivalence_sample():
    for seed in range(1000):
        psi = library.random_product_pure(seed) if seed % 2 else library.random_pure(seed)
        assert is_fully_separable_pure(psi)[0] is brute_force_product_check(psi)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0, 2 * np.pi))
def test_global_phase(seed, theta):
    psi = library.random_pure(seed)
    rotated = pure_from_amplitudes(np.exp(1j * theta) * psi.amp)
    c0, c1 = c_vector(psi), c_vector(rotated)
    np.testing.assert_allclose(c1.components, np.exp(2j * theta) * c0.components, atol=1e-14)
    assert c1.norm == pytest.approx(c0.norm, abs=1e-14)


def test_minor_equivalence_random():
    rng = np.random.default_rng(9)
    for trial in range(500):
        if trial % 2:
            psi = library.random_product_pure(int(rng.integers(2**32)))
        else:
            psi = library.random_pure(int(rng.integers(2**32)))
        res_zero = minor_residuals(psi).max() < 1e-12
        norm_zero = c_vector(psi).norm < 1e-11
        assert res_zero == norm_zero
        # faces: each |C| pair sums to twice the face residual
        comps = np.abs(c_vector(psi).components)
        res = minor_residuals(psi).values
        assert comps[4] + comps[5] == pytest.approx(2 * res[0], abs=1e-14)
        assert comps[2] + comps[3] == pytest.approx(2 * res[1], abs=1e-14)
        assert comps[0] + comps[1] == pytest.approx(2 * res[2], abs=1e-14)
        np.testing.assert_allclose(comps[[7, 6, 8]], 2 * np.array(res[3:]), atol=1e-14)


def test_wootters_reduction():
    rng = np.random.default_rng(4)
    for _ in range(200):
        phi = random_unit(rng, 4)
        psi = pure_from_amplitudes(np.kron(phi, [1, 0]))
        assert abs(c_vector(psi).norm - wootters_concurrence_pure(phi)) < 1e-12


@pytest.mark.parametrize("perm", list(itertools.permutations(range(3))))
def test_permutation_covariance(perm):
    for seed in range(20):
        psi = library.random_pure(seed)
        moved = pure_from_amplitudes(np.transpose(psi.tensor, perm).reshape(8))
        c0, c1 = c_vector(psi), c_vector(moved)
        np.testing.assert_allclose(np.sort(np.abs(c1.components)), np.sort(np.abs(c0.components)), atol=1e-14)
        assert c1.norm == pytest.approx(c0.norm, abs=1e-14)


def find_reduced_counterexample(seeds=range(20)):
    """Entangled state on which every reduced-set form vanishes."""
    ops = build_s_operators(OperatorVariant.REDUCED)

    def residual(x):
        a = x[:8] + 1j * x[8:]
        a = a / np.linalg.norm(a)
        c = np.einsum("m,amn,n->a", a, ops.matrices, a)
        return np.concatenate([c.real, c.imag])

    for seed in seeds:
        x0 = np.random.default_rng(seed).standard_normal(16)
        fit = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        psi = pure_from_amplitudes(fit.x[:8] + 1j * fit.x[8:])
        if c_vector(psi, ops).norm < 1e-12 and brute_force_product_check(psi) is ENT:
            return psi
    return None


def test_reduced_set_misses_entangled_states():
    psi = find_reduced_counterexample()
    assert psi is not None
    assert c_vector(psi, build_s_operators("reduced")).norm < 1e-12
    assert c_vector(psi).norm > 0.1
    assert is_fully_separable_pure(psi)[0] is ENT
