import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srgkit import iterbench as ib
from srgkit import operatorlab as ol
from srgkit import srgcore as sc
from srgkit import suites


def test_identity_residuals_zero():
    tr = ib.iterate(ol.LinearPlaneOperator(np.eye(2)), [1.0, 2.0], 10)
    assert tr.residuals.shape == (10,) and tr.iterates.shape == (10, 2)
    assert np.all(tr.residuals == 0)
    rep = ib.residual_rate_check(tr, theta=0.5, T=ol.LinearPlaneOperator(np.eye(2)))
    assert rep.holds and rep.max_ratio == 0.0


def test_half_contraction_closed_form():
    tr = ib.iterate(ol.LinearPlaneOperator(0.5 * np.eye(2)), [1.0, 0.0], 30)
    k = np.arange(30)
    assert np.allclose(tr.residuals, 0.5 * 2.0 ** -k, rtol=1e-15, atol=0)
    assert np.allclose(tr.x_last, [2.0 ** -30, 0.0])


def test_averaged_rotation_converges():
    T = ol.averaged_from_contraction(0.75, cmath.exp(1j * math.pi / 4))
    tr = ib.iterate(T, [1.0, -1.0], 1000)
    assert np.all(np.diff(tr.residuals) <= 0)
    assert tr.residuals[-1] < 1e-8


def test_iterate_rejects_and_raises():
    with pytest.raises(ValueError):
        ib.iterate(lambda x: x, [0.0, 0.0], 0)
    # x_1 = 1e200, x_2 overflows
    with np.errstate(over="ignore"), pytest.raises(FloatingPointError, match="k=2"):
        ib.iterate(lambda x: x * 1e200, [1.0, 0.0], 5)


def test_nearest_fixed_point():
    assert np.allclose(ib.nearest_fixed_point(0.5 * np.eye(2), [3.0, 4.0]), 0.0)
    assert np.allclose(ib.nearest_fixed_point(np.eye(2), [3.0, 4.0]), [3.0, 4.0])
    # projector onto the x-axis fixes the x-axis
    assert np.allclose(ib.nearest_fixed_point(np.diag([1.0, 0.2]), [3.0, 4.0]), [3.0, 0.0])


def test_rate_bound_half_half_composition():
    T = ol.averaged_from_contraction(0.5, cmath.exp(2.0j)) @ ol.averaged_from_contraction(0.5, cmath.exp(-0.7j))
    x0 = np.array([1.0, 0.5])
    tr = ib.iterate(T, x0, 10_000, sc.tight_composition_coeff(0.5, 0.5), ib.nearest_fixed_point(T.matrix, x0))
    rep = ib.residual_rate_check(tr)
    assert rep.theta == pytest.approx(2 / 3)
    assert rep.holds and rep.monotone


def test_too_small_theta_is_flagged():
    # rotation-heavy: t = cos^2(a/2) e^{ia} is close to 0, so |1 - t| is near 1
    a = 2.8
    T = ol.averaged_from_contraction(0.5, cmath.exp(1j * a)) @ ol.averaged_from_contraction(0.5, cmath.exp(1j * a))
    x0 = np.array([1.0, 0.0])
    tr = ib.iterate(T, x0, 1000, 2 / 3, np.zeros(2))
    assert ib.residual_rate_check(tr).holds
    bad = ib.residual_rate_check(tr, theta=0.4)
    assert not bad.holds
    assert bad.first_violation == 0
    assert bad.max_ratio > 1


def test_rate_check_estimates_x_star():
    T = ol.averaged_from_contraction(0.3, 0.5j)
    tr = ib.iterate(T, [1.0, 1.0], 100, 0.3)
    rep = ib.residual_rate_check(tr, T=T)
    assert rep.holds
    assert rep.slack < 1e-12
    with pytest.raises(ValueError):
        ib.residual_rate_check(tr)
    with pytest.raises(ValueError):
        ib.residual_rate_check(ib.iterate(T, [1.0, 1.0], 5))


@given(st.integers(0, 2 ** 32 - 1))
def test_rate_bound_random_instances(seed):
    rng = np.random.default_rng(seed)
    T, theta = (suites.random_averaged_instance if seed % 2 else suites.random_composition_instance)(rng)
    x0 = rng.normal(size=2)
    tr = ib.iterate(T, x0, 1000, theta, ib.nearest_fixed_point(T.matrix, x0))
    rep = ib.residual_rate_check(tr)
    assert rep.holds, rep.max_ratio
    assert rep.monotone


# ---- DYS inclusion


def test_dys_zero_operators():
    z = ol.LinearPlaneOperator(np.zeros((2, 2)))
    rep = ib.dys_solve_inclusion(z, z, z, 1.0, 1.0, [0.3, -0.2])
    assert rep.iterations == 1
    assert np.allclose(rep.z, [0.3, -0.2])
    assert rep.inclusion_residual == 0.0 and rep.certified


def test_dys_scaled_identity():
    mu = 0.1
    m = ol.LinearPlaneOperator(mu * np.eye(2))
    rep = ib.dys_solve_inclusion(m, m, m, 1 / mu, 5.0, [1.0, 2.0])
    assert rep.converged and rep.certified
    assert np.linalg.norm(rep.z) <= 1e-8 / (3 * mu) * (1 + 1e-9)


def test_dys_random_instances(rng):
    for _ in range(20):
        A, B, C, beta = suites.random_dys_instance(rng)
        rep = ib.dys_solve_inclusion(A, B, C, beta, beta, rng.normal(size=2))
        assert rep.converged and rep.certified, rep
        assert rep.iterations <= 10_000


def test_fixed_point_encoding(rng):
    # |x - Tx| <= 1e-10 implies |(A + B + C) J_B x| <= 1e-8
    for _ in range(10):
        A, B, C, beta = suites.random_dys_instance(rng)
        T = ol.dys_assemble(A, B, C, beta, beta=beta)
        x = rng.normal(size=2)
        for _ in range(10_000):
            if np.linalg.norm(x - T(x)) <= 1e-10:
                break
            x = T(x)
        assert np.linalg.norm(x - T(x)) <= 1e-10
        z = ol.resolvent_linear(B, beta)(x)
        assert np.linalg.norm((A.matrix + B.matrix + C.matrix) @ z) <= 1e-8


def test_dys_rejects_parameters():
    z = ol.LinearPlaneOperator(np.zeros((2, 2)))
    with pytest.raises(ValueError):
        ib.dys_solve_inclusion(z, z, z, 1.0, 2.0, [0.0, 0.0])
    with pytest.raises(ValueError):
        ib.dys_solve_inclusion(ol.LinearPlaneOperator(-np.eye(2)), z, z, 1.0, 1.0, [0.0, 0.0])


@pytest.mark.parametrize("s", [0.1, 3.0, 17.0])
def test_dys_scaling_consistency(s, rng):
    A, B, C, beta = suites.random_dys_instance(rng)
    gamma = 0.8 * beta
    t = ol.dys_assemble(A, B, C, gamma, beta=beta)
    scaled = [ol.LinearPlaneOperator(M.matrix / s) for M in (A, B, C)]
    ts = ol.dys_assemble(*scaled, s * gamma, beta=s * beta)
    assert np.allclose(t.matrix, ts.matrix, atol=1e-12)
    d, ds = sc.dys_region(sc.DysClass(beta, gamma)), sc.dys_region(sc.DysClass(s * beta, s * gamma))
    assert d.center == pytest.approx(ds.center, abs=1e-14)
    assert d.radius == pytest.approx(ds.radius, abs=1e-14)
