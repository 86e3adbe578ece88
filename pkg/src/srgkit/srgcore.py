"""SRG regions of operator classes.

Covers the averaged, cocoercive and Davis-Yin classes, the Minkowski product
Disk(theta1)Disk(theta2) that is the SRG of a composition of two averaged
operators, the tight averagedness coefficient of that composition with its
tangency and curvature certificates, and the geometric construction showing
that Davis-Yin operators fill their whole averagedness disk.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .planegeom import (
    DiskRegion,
    PolarQuadratic,
    Polyline,
    check_open_unit,
    curvature_at,
    f2_eval,
    f2_grad,
    oval_roots,
)

TOL_ANALYTIC = 1e-9


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class AveragedClass:
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", check_open_unit(self.theta))


@dataclass(frozen=True)
class CocoerciveClass:
    beta: float

    def __post_init__(self):
        if not (float(self.beta) > 0.0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        object.__setattr__(self, "beta", float(self.beta))


@dataclass(frozen=True)
class DysClass:
    """Davis-Yin operators T_gamma(A, B, C) with A, B monotone and C beta-cocoercive."""

    beta: float
    gamma: float

    def __post_init__(self):
        beta, gamma = float(self.beta), float(self.gamma)
        if not (beta > 0.0 and math.isfinite(beta)):
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        if not (0.0 < gamma < 2.0 * beta):
            raise ValueError(f"gamma must lie in the open interval (0, 2*beta) = (0, {2 * beta!r}), got {gamma!r}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @property
    def averagedness(self):
        return 2.0 * self.beta / (4.0 * self.beta - self.gamma)


def srg_of_averaged(cls):
    return DiskRegion.averaged(cls.theta)


def srg_of_cocoercive(cls):
    """(1/beta) Disk(1/2): the disk through 0 and 1/beta."""
    r = 0.5 / cls.beta
    return DiskRegion(r, r)


def tight_composition_coeff(theta1, theta2):
    """Smallest theta with N_theta1 N_theta2 inside N_theta."""
    t1 = check_open_unit(theta1, "theta1")
    t2 = check_open_unit(theta2, "theta2")
    return (t1 + t2 - 2.0 * t1 * t2) / (1.0 - t1 * t2)


# ------------------------------------------------- product membership


def product_witness(theta1, theta2, z):
    """Best factor w for writing z = z_a * w with z_a in Disk(theta_a), w in Disk(theta_b).

    z_a = z / w lies in Disk(theta_a) iff q(w) = k |w|^2 - 2 c_a Re(z conj(w)) + |z|^2 <= 0
    with k = 1 - 2 theta_a and c_a = 1 - theta_a. The minimizer of q over
    Disk(theta_b) is explicit: the projection of c_a z / k onto the disk when k > 0,
    otherwise the boundary point in the direction of c_a z - k c_b (both limits
    agree as k -> 0). Returns (theta_a, w); the factor a is the one farther from 1/2.
    """
    if abs(1.0 - 2.0 * theta1) >= abs(1.0 - 2.0 * theta2):
        ta, tb = theta1, theta2
    else:
        ta, tb = theta2, theta1
    ca, cb = 1.0 - ta, 1.0 - tb
    kappa = 1.0 - 2.0 * ta
    e = ca * z - kappa * cb
    ae = np.abs(e)
    u = np.where(ae > 0.0, e / np.where(ae > 0.0, ae, 1.0), 1.0)
    w = cb + tb * u
    if kappa > 0.0:
        target = ca * z / kappa
        w = np.where(np.abs(target - cb) <= tb, target, w)
    return ta, w


def product_margin(theta1, theta2, z):
    """Signed membership margin for the Minkowski product Disk(theta1)Disk(theta2).

    The margin is theta_a |w| - |z - c_a w| for the optimal factor w of
    ``product_witness``: the signed distance from z to the disk w * Disk(theta_a),
    which is part of the product. It is >= 0 exactly on the product, and outside
    it is at least the distance to the product, so ``margin >= -tol`` never
    accepts a point farther than ``tol`` from the product.
    """
    check_open_unit(theta1, "theta1")
    check_open_unit(theta2, "theta2")
    z = np.asarray(z, dtype=np.complex128)
    ta, w = product_witness(theta1, theta2, z)
    m = ta * np.abs(w) - np.abs(z - (1.0 - ta) * w)
    return m if m.ndim else float(m)


def product_contains(theta1, theta2, z, tol=TOL_ANALYTIC):
    return np.asarray(product_margin(theta1, theta2, z)) >= -tol


def product_contains_grid(theta1, theta2, z, tol=TOL_ANALYTIC, n_rad=256, n_ang=256,
                          levels=2, n_refine=16):
    """Grid-search resolution of the same quantifier (independent oracle).

    Searches w over a polar grid of Disk(theta2) for z/w in Disk(theta1), then
    refines twice around the best cell. Returns (members, margin, w) where margin
    is the smallest distance from z to a disk w*Disk(theta1) that was found.
    """
    from . import kernels

    pts = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    margin, w = kernels.product_grid_margin(pts, theta1, theta2, n_rad, n_ang, levels, n_refine)
    zero = pts == 0
    margin = np.where(zero, np.where(max(theta1, theta2) >= 0.5, 0.0, np.inf), margin)
    return margin <= tol, margin, w


# ------------------------------------------------- composition region


@dataclass(frozen=True, eq=False)
class CompositionOvalRegion:
    """SRG of N_theta1 N_theta2: the region enclosed by the outer oval of f2 = 0."""

    theta1: float
    theta2: float
    boundary: Polyline
    resolution: int
    diagnostics: dict = field(default_factory=dict)
    tol: float = TOL_ANALYTIC

    @property
    def tight_theta(self):
        return tight_composition_coeff(self.theta1, self.theta2)

    @property
    def tight_disk(self):
        return DiskRegion.averaged(self.tight_theta)

    def margin(self, z):
        return product_margin(self.theta1, self.theta2, z)

    def contains(self, z, tol=None):
        tol = self.tol if tol is None else tol
        out = np.asarray(self.margin(z)) >= -tol
        return bool(out) if out.ndim == 0 else out

    def bbox(self):
        v = self.boundary.vertices
        return v.real.min(), v.real.max(), v.imag.min(), v.imag.max()


def _circ_product_sample(theta1, theta2, n=128):
    a = np.arange(n) * (2.0 * np.pi / n)
    z1 = 1.0 - theta1 + theta1 * np.exp(1j * a)
    z2 = 1.0 - theta2 + theta2 * np.exp(1j * a)
    return (z1[:, None] * z2[None, :]).ravel()


def _polish(theta1, theta2, z, max_step, iters=100):
    """Newton projection onto f2 = 0 along the gradient."""
    z = np.array(z, dtype=np.complex128)
    active = np.ones(z.size, dtype=bool)
    for _ in range(iters):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        za = z[idx]
        f = f2_eval(theta1, theta2, za)
        g = f2_grad(theta1, theta2, za)
        g2 = g.real ** 2 + g.imag ** 2
        ok = g2 > 1e-300
        step = np.where(ok, f * g / np.where(ok, g2, 1.0), 0.0)
        big = np.abs(step) > max_step
        step[big] *= max_step / np.abs(step[big])
        z[idx] = za - step
        active[idx] = (np.abs(step) > 1e-14 * np.maximum(1.0, np.abs(za))) & ok
    return z


def _marching_squares(values, x0, y0, hx, hy):
    """Closed zero-contours of a sampled function (values[j, i] at x0 + i hx, y0 + j hy).

    Negative corners are the region side; saddle cells join the negative corners.
    Returns a list of complex vertex arrays, one per closed loop.
    """
    ny, nx = values.shape
    neg = values < 0.0
    hcross = neg[:, :-1] != neg[:, 1:]
    vcross = neg[:-1, :] != neg[1:, :]

    def interp(v0, v1):
        return v0 / (v0 - v1)

    nh = ny * (nx - 1)
    pos = {}
    jj, ii = np.nonzero(hcross)
    t = interp(values[jj, ii], values[jj, ii + 1])
    for j, i, tt in zip(jj.tolist(), ii.tolist(), t.tolist()):
        pos[j * (nx - 1) + i] = complex(x0 + (i + tt) * hx, y0 + j * hy)
    jj, ii = np.nonzero(vcross)
    t = interp(values[jj, ii], values[jj + 1, ii])
    for j, i, tt in zip(jj.tolist(), ii.tolist(), t.tolist()):
        pos[nh + j * nx + i] = complex(x0 + i * hx, y0 + (j + tt) * hy)

    # edge flags per cell: bottom, right, top, left
    b = hcross[:-1, :]
    tp = hcross[1:, :]
    lf = vcross[:, :-1]
    rt = vcross[:, 1:]
    count = b.astype(int) + tp + lf + rt
    adjacency = {}

    def link(e1, e2):
        adjacency.setdefault(e1, []).append(e2)
        adjacency.setdefault(e2, []).append(e1)

    jj, ii = np.nonzero(count > 0)
    for j, i in zip(jj.tolist(), ii.tolist()):
        eb = j * (nx - 1) + i
        et = (j + 1) * (nx - 1) + i
        el = nh + j * nx + i
        er = nh + j * nx + i + 1
        if count[j, i] == 2:
            e = [ed for ed, f in ((eb, b[j, i]), (er, rt[j, i]), (et, tp[j, i]), (el, lf[j, i])) if f]
            link(e[0], e[1])
        else:
            if neg[j, i]:  # bottom-left and top-right negative
                link(eb, er)
                link(et, el)
            else:
                link(el, eb)
                link(er, et)

    loops = []
    seen = set()
    for start in adjacency:
        if start in seen:
            continue
        loop = [start]
        seen.add(start)
        prev, cur = None, start
        closed = False
        while True:
            nbrs = [e for e in adjacency[cur] if e != prev] or adjacency[cur]
            nxt = nbrs[0]
            if nxt == start:
                closed = True
                break
            if nxt in seen:
                break
            seen.add(nxt)
            loop.append(nxt)
            prev, cur = cur, nxt
        if closed and len(loop) >= 3:
            loops.append(np.array([pos[e] for e in loop]))
    return loops


def _on_boundary(theta1, theta2, z, tol=1e-9):
    """Polished points must be boundary points of the product, not other branches of f2 = 0."""
    return np.abs(product_margin(theta1, theta2, z)) <= tol


def _refine(theta1, theta2, v, max_step, sag_tol, min_len=1e-12, max_rounds=80):
    """Insert polished midpoints wherever a chord strays from the curve."""
    for _ in range(max_rounds):
        nxt = np.roll(v, -1)
        mid = 0.5 * (v + nxt)
        seg = np.abs(nxt - v)
        pol = _polish(theta1, theta2, mid, max_step)
        dev = np.abs(pol - mid)
        ins = (dev > sag_tol) & (seg > min_len) & (dev < np.maximum(seg, 5.0 * max_step))
        ins &= _on_boundary(theta1, theta2, pol)
        if not ins.any():
            break
        out = np.empty(v.size + int(ins.sum()), dtype=np.complex128)
        k = np.arange(v.size) + np.concatenate([[0], np.cumsum(ins)[:-1]])
        out[k] = v
        out[k[ins] + 1] = pol[ins]
        v = out
    return v


def _singular_points(theta1, theta2):
    """Cusps and nodes of f2 = 0 on the real axis that lie on the product boundary.

    The polar quadratic has a double root where c(phi)^2 = d; at phi = 0 or pi
    that is a crossing of the two root branches. The origin is on the curve
    whenever d = 0.
    """
    q = PolarQuadratic(theta1, theta2)
    cands = []
    if abs(q.d) <= 1e-15:
        cands.append(0.0)
    for phi in (0.0, math.pi):
        c = float(q.c(phi))
        if abs(c * c - q.d) <= 1e-12:
            cands.append(c * math.cos(phi))
    return [z for z in cands if _on_boundary(theta1, theta2, z, 1e-12)]


def _pin_points(v, points, h):
    """Insert each point as a vertex into the nearest segment, if it lies within 10 h."""
    for p in points:
        if np.any(v == p):
            continue
        nxt = np.roll(v, -1)
        seg = nxt - v
        rel = p - v
        t = np.clip((rel * seg.conjugate()).real / np.maximum(np.abs(seg) ** 2, 1e-300), 0.0, 1.0)
        dist = np.abs(rel - t * seg)
        k = int(np.argmin(dist))
        if dist[k] <= 10.0 * h:
            v = np.insert(v, k + 1, p)
    return v


def _grid(theta1, theta2, n):
    sample = _circ_product_sample(theta1, theta2)
    lo_x, hi_x = sample.real.min(), max(sample.real.max(), 1.0)
    lo_y, hi_y = sample.imag.min(), sample.imag.max()
    pad = 0.05 * max(hi_x - lo_x, hi_y - lo_y)
    hx = (hi_x - lo_x + 2 * pad) / n
    hy = (hi_y - lo_y + 2 * pad) / n
    # irrational offset keeps special points (0, 1) off the grid nodes
    x0 = lo_x - pad - 0.3183 * hx
    y0 = lo_y - pad - 0.2718 * hy
    xs = x0 + hx * np.arange(n + 2)
    ys = y0 + hy * np.arange(n + 2)
    return xs[None, :] + 1j * ys[:, None], x0, y0, hx, hy


def count_quartic_components(theta1, theta2, resolution=256):
    """Number of closed components of f2 = 0 seen by marching squares (1 or 2; nodes may merge them)."""
    z, x0, y0, hx, hy = _grid(theta1, theta2, resolution)
    return len(_marching_squares(f2_eval(theta1, theta2, z), x0, y0, hx, hy))


def composition_region(theta1, theta2, boundary_resolution=1024, sag_tol=1e-8):
    """Build the SRG region of compositions of theta1- and theta2-averaged operators.

    The boundary is the outer oval of f2 = 0, the component through 1. It is
    traced by marching squares on the membership margin (whose zero set is the
    region boundary alone, so inner ovals and nodes cannot capture the trace)
    over a ``boundary_resolution``-square grid, projected onto f2 = 0, and
    refined until every chord is within ``sag_tol`` of the curve.
    """
    theta1 = check_open_unit(theta1, "theta1")
    theta2 = check_open_unit(theta2, "theta2")
    if boundary_resolution < 64:
        raise ValueError("boundary_resolution must be at least 64")
    n = int(boundary_resolution)
    z, x0, y0, hx, hy = _grid(theta1, theta2, n)
    loops = _marching_squares(-product_margin(theta1, theta2, z), x0, y0, hx, hy)
    if not loops:
        raise RuntimeError("no zero contour found")
    areas = [abs(np.sum(l.real * np.roll(l.imag, -1) - np.roll(l.real, -1) * l.imag)) for l in loops]
    outer = loops[int(np.argmax(areas))]
    h = max(hx, hy)
    if np.min(np.abs(outer - 1.0)) > 2 * h:
        raise RuntimeError("outer contour does not pass through 1")
    v = _polish(theta1, theta2, outer, h)
    v = v[_on_boundary(theta1, theta2, v)]
    v = _pin_points(v, _singular_points(theta1, theta2), h)
    v = _refine(theta1, theta2, v, h, sag_tol)
    poly = Polyline(v, closed=True)
    if poly.signed_area < 0:
        poly = poly.reversed()
    diag = _validate_boundary(theta1, theta2, poly)
    diag.update(n_loops=len(loops), grid_step=h,
                n_quartic_components=count_quartic_components(theta1, theta2))
    return CompositionOvalRegion(theta1, theta2, poly, n, diag)


def _validate_boundary(theta1, theta2, poly, n_check=512):
    v = poly.vertices
    f = np.abs(f2_eval(theta1, theta2, v))
    q = PolarQuadratic(theta1, theta2)
    step = max(1, v.size // n_check)
    mismatch = 0.0
    for z in v[::step]:
        rho, phi = abs(z), math.atan2(z.imag, z.real)
        cands = [r for r in oval_roots(q, phi) if r >= 0] + [-r for r in oval_roots(q, phi + math.pi) if r <= 0]
        if rho < 1e-12:
            continue
        mismatch = max(mismatch, min((abs(r - rho) for r in cands), default=math.inf))
    if f.max() >= 1e-8 or mismatch > 1e-6:
        raise RuntimeError(f"boundary validation failed: max|f2|={f.max():.3g}, root mismatch={mismatch:.3g}")
    return {"max_abs_f2": float(f.max()), "max_root_mismatch": float(mismatch), "n_vertices": int(v.size)}


def region_contains(region, z, tol=None):
    return region.contains(z, tol)


# ------------------------------------------------- tangency and tightness


def tangency_g(theta1, theta2, phi):
    """f2 on Circ(theta) in closed form; zero only at phi = 0."""
    t1, t2 = theta1, theta2
    num = 16.0 * t1 ** 2 * t2 ** 2 * (1 - t1) ** 2 * (1 - t2) ** 2 * (t1 + t2 - 2 * t1 * t2) ** 2
    return num * np.sin(np.asarray(phi) / 2.0) ** 4 / (1 - t1 * t2) ** 4


def outer_radius(theta1, theta2, phi):
    """Larger root of the polar quadratic; the outer oval near phi = 0."""
    q = PolarQuadratic(theta1, theta2)
    c = q.c(np.asarray(phi, dtype=float))
    return c + np.sqrt(c * c - q.d)


def boundary_curvature_at_one(theta1, theta2, h=None):
    """Curvature of the outer oval at 1.

    With ``h`` given, derivatives of the root branch come from five-point central
    differences; otherwise from implicit differentiation (r'(0) = 0,
    r''(0) = -(1-theta1)(1-theta2) / (theta1 + theta2 - 2 theta1 theta2)).
    """
    if h is None:
        d2r = -(1 - theta1) * (1 - theta2) / (theta1 + theta2 - 2 * theta1 * theta2)
        return curvature_at(1.0, 0.0, d2r)
    # five-point stencils: the three-point error ~h^2 r^(4) / 12 passes 1e-5
    # at h = 1e-3 once theta is small and the oval is sharply curved
    rm2, rm, r0, rp, rp2 = outer_radius(theta1, theta2, [-2 * h, -h, 0.0, h, 2 * h])
    dr = (rm2 - 8 * rm + 8 * rp - rp2) / (12 * h)
    d2r = (-rm2 + 16 * rm - 30 * r0 + 16 * rp - rp2) / (12 * h * h)
    return curvature_at(r0, dr, d2r)


@dataclass
class TangencyReport:
    theta1: float
    theta2: float
    theta: float
    max_g_mismatch: float
    g_at_zero: float
    min_g_away: float
    g_positive: bool
    curvature_closed_form: float
    curvature_fd: dict
    curvature_target: float
    tol: float
    fd_tol: float

    @property
    def passed(self):
        fd_ok = all(abs(k - self.curvature_target) <= self.fd_tol for k in self.curvature_fd.values())
        return (self.max_g_mismatch < self.tol and self.g_positive and self.g_at_zero == 0.0
                and abs(self.curvature_closed_form - self.curvature_target) <= self.tol and fd_ok)


def tangency_certificate(theta1, theta2, phi_grid=None, away=1e-3, tol=TOL_ANALYTIC,
                         fd_steps=(1e-3, 1e-4), fd_tol=1e-5):
    """Certify that Circ(theta) touches the composition region only at 1, with matching curvature."""
    theta = tight_composition_coeff(theta1, theta2)
    if phi_grid is None:
        phi_grid = np.linspace(-np.pi, np.pi, 1001)
    phi = np.asarray(phi_grid, dtype=float)
    on_circle = (1.0 - theta) + theta * np.exp(1j * phi)
    g = tangency_g(theta1, theta2, phi)
    mismatch = float(np.max(np.abs(f2_eval(theta1, theta2, on_circle) - g)))
    far = np.abs(phi) > away
    min_away = float(g[far].min()) if far.any() else math.inf
    return TangencyReport(
        theta1=theta1, theta2=theta2, theta=theta,
        max_g_mismatch=mismatch,
        g_at_zero=float(tangency_g(theta1, theta2, 0.0)),
        min_g_away=min_away,
        g_positive=bool(min_away > 0.0),
        curvature_closed_form=boundary_curvature_at_one(theta1, theta2),
        curvature_fd={h: boundary_curvature_at_one(theta1, theta2, h) for h in fd_steps},
        curvature_target=1.0 / theta,
        tol=tol,
        fd_tol=fd_tol,
    )


@dataclass
class Witness:
    z1: complex
    z2: complex
    point: complex
    outside_by: float


def tightness_witness(theta1, theta2, delta, n_scales=80, n_ratio=161, margin=1e-9):
    """Search products z1*z2 near 1 lying outside Disk((1 - delta) * theta).

    z1 and z2 run over Circ(theta1), Circ(theta2) at small angles a, b with
    b near a (1 - theta1)/(1 - theta2), the direction along which products
    trace the region boundary through 1. Among products outside the shrunk
    disk by more than ``margin``, returns the one closest in angle to 1, or None.
    """
    theta = tight_composition_coeff(theta1, theta2)
    shrunk = DiskRegion.averaged((1.0 - delta) * theta)
    a = np.geomspace(1e-4, 0.5, n_scales)
    ratio = (1.0 - theta1) / (1.0 - theta2) * (1.0 + np.linspace(-0.9, 0.9, n_ratio))
    b = a[:, None] * ratio[None, :]
    z1 = (1.0 - theta1 + theta1 * np.exp(1j * a))[:, None] * np.ones_like(b)
    z2 = 1.0 - theta2 + theta2 * np.exp(1j * b)
    prod = (z1 * z2).ravel()
    sd = shrunk.signed_distance(prod)
    out = np.flatnonzero(sd > margin)
    if out.size == 0:
        return None
    k = out[np.argmin(np.abs(np.angle(prod[out])))]
    return Witness(complex(z1.ravel()[k]), complex(z2.ravel()[k]), complex(prod[k]), float(sd[k]))


# ------------------------------------------------- Davis-Yin


def dys_map(z1, z2, z3, gamma):
    """Scalar Davis-Yin map 1 - z2 + z1 (2 z2 - 1 - gamma z3 z2)."""
    return 1.0 - z2 + z1 * (2.0 * z2 - 1.0 - gamma * z3 * z2)


def dys_region(cls):
    """Disk with center (2 beta - gamma)/(4 beta - gamma) and radius 2 beta/(4 beta - gamma)."""
    r = cls.averagedness
    return DiskRegion(1.0 - r, r)


@dataclass(frozen=True)
class DysConstruction:
    theta: float
    a1: complex
    a2: complex
    a3: complex
    o1: complex
    o2: complex
    b: complex
    p: float
    z3: complex


def _dys_construct_arrays(cls, theta):
    beta, gamma = cls.beta, cls.gamma
    theta = np.asarray(theta, dtype=float)
    cos_t = np.cos(theta)
    a1 = cos_t * np.exp(1j * theta)
    a2 = 2.0 * a1 * a1 - 2.0 * a1 + 1.0
    a3 = (gamma / beta) * a1 * a1
    o1 = a3 / 2.0
    o2 = a2 - o1
    p = (2.0 * beta - gamma) / (4.0 * beta - gamma)
    reach = (gamma / (2.0 * beta)) * cos_t ** 2
    d = o2 - p
    dist = np.abs(d)
    b = p + d / dist * (dist + reach)
    ga = gamma * a1 * a1
    safe = np.abs(ga) > 0
    z3 = np.where(safe, (a2 - b) / np.where(safe, ga, 1.0), 0.0)
    return a1, a2, a3, o1, o2, b, p, z3


def dys_step2_construct(cls, theta):
    """Point B of Circ(2 beta/(4 beta - gamma)) reached with z1 = z2 = cos(theta) e^{i theta}."""
    theta = float(theta)
    if not (-math.pi / 2 <= theta < math.pi / 2):
        raise ValueError(f"theta must lie in [-pi/2, pi/2), got {theta!r}")
    a1, a2, a3, o1, o2, b, p, z3 = _dys_construct_arrays(cls, theta)
    return DysConstruction(theta, complex(a1), complex(a2), complex(a3), complex(o1),
                           complex(o2), complex(b), float(p), complex(z3))


def dys_step2_sweep(cls, n=4096):
    """Vectorized construction over theta = -pi/2 + pi k/n, k < n.

    Returns a dict of arrays (theta, a1, o2, b, z3) and the center p.
    """
    theta = -np.pi / 2 + np.pi * np.arange(n) / n
    a1, a2, a3, o1, o2, b, p, z3 = _dys_construct_arrays(cls, theta)
    return {"theta": theta, "a1": a1, "o2": o2, "b": b, "z3": z3, "p": p}


def cardioid_hausdorff(poly, n=200_000):
    """Hausdorff distance from ``poly`` to the cardioid r = (1 + cos phi)/2."""
    from .planegeom import hausdorff_to_curve

    def c(t):
        return 0.5 * (1 + np.cos(t)) * np.exp(1j * t)

    def dc(t):
        return 0.5 * np.exp(1j * t) * (-np.sin(t) + 1j * (1 + np.cos(t)))

    def d2c(t):
        e = np.exp(1j * t)
        return 0.5 * e * (-np.cos(t) - 2j * np.sin(t) - (1 + np.cos(t)))

    cusp = np.geomspace(1e-9, 0.2, 4000)
    t = np.unique(np.concatenate([np.linspace(-np.pi, np.pi, n), np.pi - cusp, -np.pi + cusp]))
    return hausdorff_to_curve(poly, c, dc, d2c, t)
