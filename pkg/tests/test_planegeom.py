import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srgkit.planegeom import (
    CircleFamily,
    DiskRegion,
    PolarQuadratic,
    Polyline,
    curvature_at,
    envelope_points,
    f2_eval,
    f2_grad,
    min_circle_through_one,
    oval_roots,
    step1_family,
    winding_number,
    winding_numbers,
)

unit = st.floats(0.01, 0.99)
angle = st.floats(-math.pi, math.pi)


def circle(n=360, r=1.0, c=0.0):
    return Polyline(c + r * np.exp(2j * np.pi * np.arange(n) / n), closed=True)


# ---- disks


def test_averaged_disk_geometry():
    d = DiskRegion.averaged(0.5)
    assert (d.center, d.radius) == (0.5, 0.5)
    assert DiskRegion.averaged(0.75).leftmost == pytest.approx(-0.5)
    assert DiskRegion.averaged(0.3).rightmost == pytest.approx(1.0)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5])
def test_averaged_disk_rejects_endpoints(bad):
    with pytest.raises(ValueError, match="open interval"):
        DiskRegion.averaged(bad)


def test_disk_signed_distance():
    d = DiskRegion(0.5, 0.5)
    assert d.signed_distance(0.5) == pytest.approx(-0.5)
    assert d.signed_distance(2.0) == pytest.approx(1.0)
    assert d.contains(1.0) and not d.contains(1.0 + 1e-6)


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        DiskRegion(0.0, -1.0)


# ---- polar quadratic


def test_roots_quarter_quarter_at_zero():
    # c = 5/8, d = 1/4: r^2 - 5/4 r + 1/4 = (r - 1)(r - 1/4)
    assert oval_roots(PolarQuadratic(0.25, 0.25), 0.0) == pytest.approx([0.25, 1.0], abs=1e-15)


def test_roots_half_half_match_cardioid():
    assert oval_roots(PolarQuadratic(0.5, 0.5), math.pi / 2) == pytest.approx([0.0, 0.5], abs=1e-15)


def test_roots_one_at_zero_angle():
    assert 1.0 in [pytest.approx(r, abs=1e-12) for r in oval_roots(PolarQuadratic(0.25, 0.75), 0.0)]


def test_roots_empty_when_discriminant_negative():
    # c(pi/2) = 0.01, d = 0.64
    q = PolarQuadratic(0.1, 0.1)
    assert q.c(math.pi / 2) ** 2 < q.d
    assert oval_roots(q, math.pi / 2) == []


@given(unit, unit, angle)
def test_roots_agree_with_numpy(t1, t2, phi):
    q = PolarQuadratic(t1, t2)
    ours = oval_roots(q, phi)
    ref = np.roots([1.0, -2.0 * q.c(phi), q.d])
    real = np.sort(ref.real[np.abs(ref.imag) < 1e-9])
    if len(ours) == 2 and len(real) == 2:
        assert ours == pytest.approx(real, abs=1e-9)


@given(unit, unit, angle)
def test_roots_lie_on_quartic(t1, t2, phi):
    q = PolarQuadratic(t1, t2)
    for r in oval_roots(q, phi):
        # a negative root at phi is the point |r| e^{i(phi + pi)} = r e^{i phi}
        assert abs(f2_eval(t1, t2, r * np.exp(1j * phi))) < 1e-9


@given(unit, unit, angle)
def test_root_product_is_d(t1, t2, phi):
    q = PolarQuadratic(t1, t2)
    roots = oval_roots(q, phi)
    if len(roots) == 2:
        assert roots[0] * roots[1] == pytest.approx(q.d, abs=1e-12)


@given(unit, unit)
def test_one_is_root_at_zero(t1, t2):
    assert min(abs(r - 1.0) for r in oval_roots(PolarQuadratic(t1, t2), 0.0)) < 1e-12


# ---- quartic


@given(unit, unit)
def test_f2_vanishes_at_one(t1, t2):
    assert abs(f2_eval(t1, t2, 1.0)) < 1e-15


def test_f2_vanishes_at_cusp():
    assert f2_eval(0.5, 0.5, 0.0) == 0.0


def test_f2_expansion_below_one():
    t1 = t2 = 0.25
    eps = 1e-3
    lead = -8 * t1 * t2 * (t1 + t2 - 2 * t1 * t2) * eps
    val = f2_eval(t1, t2, 1 - eps)
    assert val < 0
    assert abs(val / lead - 1) < 10 * eps


@given(unit, unit, st.complex_numbers(max_magnitude=2.0))
def test_f2_gradient_matches_differences(t1, t2, z):
    h = 1e-6
    g = f2_grad(t1, t2, z)
    gx = (f2_eval(t1, t2, z + h) - f2_eval(t1, t2, z - h)) / (2 * h)
    gy = (f2_eval(t1, t2, z + 1j * h) - f2_eval(t1, t2, z - 1j * h)) / (2 * h)
    assert g.real == pytest.approx(gx, abs=1e-6)
    assert g.imag == pytest.approx(gy, abs=1e-6)


def test_f2_is_cardioid_at_half():
    phi = np.linspace(-3, 3, 101)
    z = 0.5 * (1 + np.cos(phi)) * np.exp(1j * phi)
    assert np.max(np.abs(f2_eval(0.5, 0.5, z))) < 1e-15


# ---- polyline


def test_polyline_dedup_and_closure():
    p = Polyline([0, 1, 1, 1j, 0], closed=True)
    assert len(p) == 3
    with pytest.raises(ValueError):
        Polyline([0, 1, 1], closed=True)


def test_polyline_area_orientation():
    sq = Polyline([0, 1, 1 + 1j, 1j], closed=True)
    assert sq.signed_area == pytest.approx(1.0)
    assert sq.reversed().signed_area == pytest.approx(-1.0)


def test_polyline_distance():
    sq = Polyline([0, 1, 1 + 1j, 1j], closed=True)
    assert sq.distance([0.5 + 0.5j, 2.0]) == pytest.approx([0.5, 1.0])
    open_line = Polyline([0, 1])
    assert open_line.distance([2.0])[0] == pytest.approx(1.0)


# ---- envelopes


def test_envelope_of_translated_circles():
    fam = CircleFamily(center=lambda t: complex(t, 0.0), dcenter=lambda t: 1.0 + 0j,
                       radius=lambda t: 1.0, dradius=lambda t: 0.0)
    env = envelope_points(fam, np.linspace(-2, 2, 9))
    assert env.n_failed == 0
    assert np.allclose(np.abs(env.points.imag), 1.0, atol=1e-10)
    assert np.allclose(env.points.real, env.params, atol=1e-10)


def test_envelope_finite_difference_gradients():
    class Family:
        def F(self, t, z):
            return abs(z - t) ** 2 - 1.0

        def dF_dt(self, t, z):
            return -2.0 * (z - t).real

        def seeds(self, t, n):
            return t + np.exp(1j * (np.arange(n) * 2 * np.pi / n + 0.1))

    env = envelope_points(Family(), [0.0, 0.5])
    assert np.allclose(np.abs(env.points.imag), 1.0, atol=1e-8)


@pytest.mark.parametrize("t1,t2,tol", [(0.5, 0.5, 1e-8), (0.25, 0.75, 1e-6), (0.3, 0.6, 1e-6)])
def test_step1_envelope_on_quartic(t1, t2, tol):
    env = envelope_points(step1_family(t1, t2), np.linspace(-3.0, 3.0, 61))
    assert env.points.size > 60
    assert np.max(np.abs(f2_eval(t1, t2, env.points))) < tol


# ---- curvature


def test_curvature_of_circle():
    assert curvature_at(2.0, 0.0, 0.0) == pytest.approx(0.5)


def test_curvature_cardioid_at_one():
    # r = (1 + cos phi)/2: r(0) = 1, r'(0) = 0, r''(0) = -1/2
    assert curvature_at(1.0, 0.0, -0.5) == pytest.approx(1.5)


@given(st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_curvature_formula_matches_parametric(t1, t2):
    # independent route: parametric curvature of the outer root branch r(phi) e^{i phi}
    q = PolarQuadratic(t1, t2)

    def pt(phi):
        return max(oval_roots(q, phi)) * np.exp(1j * phi)

    h = 1e-4
    z_m, z_0, z_p = pt(-h), pt(0.0), pt(h)
    d1 = (z_p - z_m) / (2 * h)
    d2 = (z_p - 2 * z_0 + z_m) / h ** 2
    kappa_param = abs((d1.conjugate() * d2).imag) / abs(d1) ** 3
    s = t1 + t2 - 2 * t1 * t2
    d2r = -(1 - t1) * (1 - t2) / s
    assert curvature_at(1.0, 0.0, d2r) == pytest.approx((1 - t1 * t2) / s, rel=1e-12)
    assert curvature_at(1.0, 0.0, d2r) == pytest.approx(kappa_param, rel=1e-5)


def test_curvature_degenerate():
    with pytest.raises(ValueError):
        curvature_at(0.0, 0.0, 1.0)


# ---- winding numbers


def test_winding_unit_circle():
    c = circle()
    assert winding_number(c, 0.0) == 1
    assert winding_number(c, 2.0) == 0
    assert winding_number(c.reversed(), 0.0) == -1


def test_winding_rejects_on_curve_and_open():
    c = circle()
    with pytest.raises(ValueError, match="on the curve"):
        winding_number(c, 1.0)
    with pytest.raises(ValueError):
        winding_number(Polyline([0, 1, 1j]), 0.1)


def test_winding_double_loop():
    a = np.exp(2j * np.pi * np.arange(720) / 360)
    assert winding_number(Polyline(a, closed=True), 0.0) == 2


@given(st.complex_numbers(max_magnitude=5), st.floats(0.1, 10), st.complex_numbers(max_magnitude=1.5))
def test_winding_translation_scale_invariant(shift, scale, z):
    c = circle(90)
    d = c.distance([z])[0]
    if d < 1e-3:
        return
    moved = Polyline(c.vertices * scale + shift, closed=True)
    assert winding_number(moved, z * scale + shift) == winding_number(c, z)
    assert winding_numbers(moved.reversed(), [z * scale + shift])[0] == -winding_number(c, z)


# ---- enclosing circle through 1


def test_min_circle_basics():
    assert min_circle_through_one([-1.0]) == pytest.approx(1.0)
    assert min_circle_through_one([0.0]) == pytest.approx(0.5)
    assert min_circle_through_one([]) == 0.0


def test_min_circle_rejects_right_of_one():
    with pytest.raises(ValueError):
        min_circle_through_one([1.0 + 1e-3j, 1.1])


def test_min_circle_cardioid_is_two_thirds():
    phi = np.concatenate([np.linspace(-np.pi, np.pi, 20001), np.linspace(-0.05, 0.05, 1001)])
    z = 0.5 * (1 + np.cos(phi)) * np.exp(1j * phi)
    assert min_circle_through_one(z) == pytest.approx(2 / 3, abs=1e-3)


@given(st.lists(st.complex_numbers(max_magnitude=0.9), min_size=1, max_size=20))
def test_min_circle_monotone_properties(pts):
    rho = min_circle_through_one(pts)
    assert min_circle_through_one(pts + [1.0]) == rho
    # every point lies in the returned disk; adding an interior point changes nothing
    assert np.all(np.abs(np.array(pts) - (1 - rho)) <= rho + 1e-12)
    inner = (1 - rho) + 0.5 * rho
    assert min_circle_through_one(pts + [inner]) == pytest.approx(rho, rel=1e-12)
