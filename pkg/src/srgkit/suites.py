"""Verification suites behind ``srgkit verify``.

Each suite returns a report dict (suite, pass, seed, parameters, checks) whose
``pass`` flag is the conjunction of its checks. Reports contain no
run-dependent data, so equal arguments give equal documents.
"""

import math

import numpy as np

from . import __version__
from . import iterbench as ib
from . import operatorlab as ol
from . import srgcore as sc
from .planegeom import Polyline, min_circle_through_one, winding_number


def check(name, observed, expected, tolerance, passed, witness=None, note=None):
    rec = {"name": name, "observed": observed, "expected": expected,
           "tolerance": tolerance, "pass": bool(passed)}
    if witness is not None:
        rec["witness"] = witness
    if note:
        rec["note"] = note
    return rec


def report(suite, parameters, checks, seed=None):
    return {
        "suite": suite,
        "pass": all(c["pass"] for c in checks),
        "seed": seed,
        "parameters": parameters,
        "checks": checks,
        "tool": {"name": "srgkit", "version": __version__},
    }


def _pt(z):
    return None if z is None else [float(np.real(z)), float(np.imag(z))]


# ------------------------------------------------- composition


def product_boundary_sweep(theta1, theta2, n_uniform=720, fine_step=1e-4, fine_halfwidth=0.05):
    """Circ(theta1) x Circ(theta2) products on an angular grid refined near angle 0."""
    a = np.concatenate([
        np.arange(n_uniform) * (2 * np.pi / n_uniform),
        np.arange(-fine_halfwidth, fine_halfwidth + fine_step / 2, fine_step),
    ])
    a = np.unique(np.round(a, 15))
    z1 = 1 - theta1 + theta1 * np.exp(1j * a)
    z2 = 1 - theta2 + theta2 * np.exp(1j * a)
    return (z1[:, None] * z2[None, :]).ravel()


def oracle_coefficient(theta1, theta2, **kw):
    return min_circle_through_one(product_boundary_sweep(theta1, theta2, **kw))


def composition_suite(theta1, theta2, n=1_000_000, seed=0, eps=0.02, probe=64,
                      tol_analytic=1e-9, tol_mc=1e-9, resolution=1024):
    region = sc.composition_region(theta1, theta2, resolution)
    v = region.boundary.vertices
    theta = region.tight_theta
    checks = []
    f2max = region.diagnostics["max_abs_f2"]
    checks.append(check("boundary_on_quartic", f2max, 0.0, 1e-8, f2max < 1e-8))
    sd = float(region.tight_disk.signed_distance(v).max())
    checks.append(check("boundary_in_tight_disk", sd, "<= 0", tol_analytic, sd <= tol_analytic))
    samples = ol.sample_composition_product(theta1, theta2, n, seed)
    rep = ol.coverage_report(samples, region, probe, eps, tol_mc, seed)
    worst = rep.containment_violations[0][0] if rep.containment_violations else None
    checks.append(check("containment", rep.extra["n_violations"], 0, tol_mc, rep.contained,
                        witness=_pt(worst)))
    checks.append(check("coverage_gap", rep.coverage_gap, "<= eps", eps, rep.covered,
                        witness=_pt(rep.gap_witness)))
    if theta1 == 0.5 and theta2 == 0.5:
        h = sc.cardioid_hausdorff(region.boundary)
        checks.append(check("cardioid_hausdorff", h, 0.0, 1e-6, h <= 1e-6))
    params = {"theta1": theta1, "theta2": theta2, "n": n, "eps": eps, "probe": probe,
              "resolution": resolution, "tight_theta": theta,
              "n_boundary_vertices": int(v.size), "n_samples": rep.n_samples}
    return report("composition", params, checks, seed)


# ------------------------------------------------- dys


def o2_trajectory(cls, n=4096):
    sw = sc.dys_step2_sweep(cls, n)
    return Polyline(sw["o2"], closed=True), sw


def dys_suite(beta, gamma, n=1_000_000, seed=0, eps=0.02, probe=64, sweep=4096,
              tol_analytic=1e-9, tol_mc=1e-9):
    cls = sc.DysClass(beta, gamma)
    disk = sc.dys_region(cls)
    checks = []
    sw = sc.dys_step2_sweep(cls, sweep)
    ident = float(np.max(np.abs(np.abs(sw["b"] - sw["p"]) - disk.radius)))
    checks.append(check("construction_radius", ident, disk.radius, 1e-12, ident <= 1e-12))
    images = ol.dys_sweep_images(cls, sweep)
    on = float(np.max(np.abs(np.abs(images - disk.center) - disk.radius)))
    checks.append(check("sweep_on_circle", on, 0.0, tol_analytic, on <= tol_analytic))
    poly, _ = o2_trajectory(cls, sweep)
    w = winding_number(poly, disk.center)
    # o2 - p = A (u - u0)^2 with u = e^{2 i theta} and |u0| < 1, so the winding
    # is exactly 2; enclosure only needs it nonzero
    checks.append(check("o2_winding", w, "!= 0", 0, w != 0, note="exact value is 2"))
    inner = np.abs(sw["o2"][1:] - sw["p"]).max()
    checks.append(check("o2_inside_circle", float(inner - disk.radius), "< 0", 0.0,
                        inner < disk.radius, note="theta = -pi/2 excluded: o2 = 1 on the circle"))
    samples = ol.sample_dys_region(beta, gamma, n, seed)
    rep = ol.coverage_report(samples, disk, probe, eps, tol_mc, seed)
    worst = rep.containment_violations[0][0] if rep.containment_violations else None
    checks.append(check("containment", rep.extra["n_violations"], 0, tol_mc, rep.contained,
                        witness=_pt(worst)))
    checks.append(check("coverage_gap", rep.coverage_gap, "<= eps", eps, rep.covered,
                        witness=_pt(rep.gap_witness)))
    params = {"beta": beta, "gamma": gamma, "n": n, "eps": eps, "probe": probe, "sweep": sweep,
              "center": disk.center, "radius": disk.radius, "n_samples": rep.n_samples}
    return report("dys", params, checks, seed)


# ------------------------------------------------- tightness


def tightness_suite(theta1, theta2, deltas=(0.05, 0.01), tol_analytic=1e-9, seed=None):
    cert = sc.tangency_certificate(theta1, theta2, tol=tol_analytic)
    theta = cert.theta
    checks = [
        check("g_matches_f2_on_circle", cert.max_g_mismatch, 0.0, tol_analytic,
              cert.max_g_mismatch < tol_analytic),
        check("g_zero_at_0", cert.g_at_zero, 0.0, 0.0, cert.g_at_zero == 0.0),
        check("g_positive_away_from_0", cert.min_g_away, "> 0", 0.0, cert.g_positive),
        check("curvature_closed_form", cert.curvature_closed_form, cert.curvature_target,
              tol_analytic, abs(cert.curvature_closed_form - cert.curvature_target) <= tol_analytic),
    ]
    for h, k in cert.curvature_fd.items():
        checks.append(check(f"curvature_fd_h={h:g}", k, cert.curvature_target, cert.fd_tol,
                            abs(k - cert.curvature_target) <= cert.fd_tol))
    oc = oracle_coefficient(theta1, theta2)
    checks.append(check("oracle_coefficient", oc, theta, 1e-3, abs(oc - theta) <= 1e-3))
    for d in deltas:
        w = sc.tightness_witness(theta1, theta2, d)
        checks.append(check(f"witness_delta={d:g}", None if w is None else w.outside_by, "> 0", 0.0,
                            w is not None, witness=None if w is None else _pt(w.point)))
    params = {"theta1": theta1, "theta2": theta2, "theta": theta, "deltas": list(deltas)}
    return report("tightness", params, checks, seed)


# ------------------------------------------------- rates


def random_composition_instance(rng, theta1=None, theta2=None):
    """Two averaged scaled rotations and the coefficient certified for their product."""
    t1 = rng.uniform(0.05, 0.95) if theta1 is None else theta1
    t2 = rng.uniform(0.05, 0.95) if theta2 is None else theta2
    n1, n2 = np.sqrt(rng.random(2)) * np.exp(1j * rng.uniform(-np.pi, np.pi, 2))
    T = ol.averaged_from_contraction(t1, n1) @ ol.averaged_from_contraction(t2, n2)
    return T, sc.tight_composition_coeff(t1, t2)


def random_averaged_instance(rng):
    """theta-averaged map (1-theta)I + theta N with N a random 2x2 matrix of norm <= 1."""
    theta = rng.uniform(0.05, 0.95)
    m = rng.normal(size=(2, 2))
    m /= np.linalg.norm(m, 2) / math.sqrt(rng.random())
    return ol.LinearPlaneOperator((1 - theta) * np.eye(2) + theta * m), theta


def random_monotone(rng, floor=0.2):
    l = rng.normal(size=(2, 2))
    k = rng.normal()
    return ol.LinearPlaneOperator(0.5 * l @ l.T + floor * np.eye(2) + np.array([[0, -k], [k, 0]]))


def random_dys_instance(rng):
    beta = rng.uniform(0.5, 2.0)
    psi = rng.uniform(-1.2, 1.2)
    rho = rng.uniform(0.2, 1.0) * math.cos(psi) / beta
    return random_monotone(rng), random_monotone(rng), ol.scaled_rotation(rho * np.exp(1j * psi)), beta


def rates_suite(n_instances=100, K=1000, seed=0, theta1=None, theta2=None, n_dys=20,
                dys_K=10_000, dys_tol=1e-8):
    rng = np.random.default_rng([seed, 0])
    worst, first_bad, nonmono = 0.0, None, 0
    for i in range(n_instances):
        if theta1 is None and i % 2:
            T, theta = random_averaged_instance(rng)
        else:
            T, theta = random_composition_instance(rng, theta1, theta2)
        x0 = rng.normal(size=2)
        tr = ib.iterate(T, x0, K, theta, ib.nearest_fixed_point(T.matrix, x0))
        r = ib.residual_rate_check(tr)
        worst = max(worst, r.max_ratio)
        nonmono += not r.monotone
        if not r.holds and first_bad is None:
            first_bad = {"instance": i, "k": r.first_violation}
    checks = [
        check("rate_bound_max_ratio", worst, "<= 1", 0.0, first_bad is None, witness=first_bad),
        check("residuals_nonincreasing", nonmono, 0, 0, nonmono == 0),
    ]
    rng = np.random.default_rng([seed, 1])
    worst_res, worst_it = 0.0, 0
    for _ in range(n_dys):
        A, B, C, beta = random_dys_instance(rng)
        rep = ib.dys_solve_inclusion(A, B, C, beta, beta, rng.normal(size=2), dys_K, dys_tol)
        worst_res = max(worst_res, rep.inclusion_residual)
        worst_it = max(worst_it, rep.iterations)
    checks.append(check("dys_inclusion_residual", worst_res, 0.0, dys_tol, worst_res <= dys_tol))
    checks.append(check("dys_iterations", worst_it, "<= K", dys_K, worst_it <= dys_K))
    params = {"instances": n_instances, "K": K, "dys_instances": n_dys, "dys_K": dys_K,
              "theta1": theta1, "theta2": theta2,
              "bound": "|x_k - T x_k|^2 <= theta |x0 - x*|^2 / ((1 - theta)(k + 1))"}
    return report("rates", params, checks, seed)
