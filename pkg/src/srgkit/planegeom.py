"""Complex-plane primitives.

Points of the plane are plain Python/numpy complex numbers throughout
(``ComplexPoint`` is an alias). Functions accept scalars or arrays where
that is natural.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from . import kernels

ComplexPoint = complex

__all__ = [
    "ComplexPoint",
    "DiskRegion",
    "PolarQuadratic",
    "Polyline",
    "CircleFamily",
    "Envelope",
    "oval_roots",
    "f2_eval",
    "f2_grad",
    "step1_family",
    "envelope_points",
    "curvature_at",
    "winding_number",
    "winding_numbers",
    "min_circle_through_one",
    "hausdorff_to_curve",
    "check_open_unit",
]


def check_open_unit(value, name="theta"):
    """Validate a parameter that must lie strictly inside (0, 1)."""
    value = float(value)
    if not (0.0 < value < 1.0):
        raise ValueError(f"{name} must lie in the open interval (0,1), got {value!r}")
    return value


@dataclass(frozen=True)
class DiskRegion:
    """Closed disk ``{z : |z - center| <= radius}`` with a real center."""

    center: float
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.center) and math.isfinite(self.radius)):
            raise ValueError("disk parameters must be finite")
        if self.radius < 0:
            raise ValueError(f"radius must be >= 0, got {self.radius!r}")

    @classmethod
    def averaged(cls, theta):
        """Disk(theta): center 1 - theta, radius theta; 1 is its rightmost point."""
        theta = check_open_unit(theta)
        return cls(1.0 - theta, theta)

    @property
    def rightmost(self):
        return self.center + self.radius

    @property
    def leftmost(self):
        return self.center - self.radius

    def signed_distance(self, z):
        """Positive outside, negative inside."""
        return np.abs(np.asarray(z) - self.center) - self.radius

    def contains(self, z, tol=0.0):
        return self.signed_distance(z) <= tol

    def boundary(self, n=720):
        """The circle as a counterclockwise closed polyline."""
        t = np.arange(n) * (2.0 * np.pi / n)
        return Polyline(self.center + self.radius * np.exp(1j * t), closed=True)


@dataclass(frozen=True)
class PolarQuadratic:
    """Coefficients of ``r^2 - 2 c(phi) r + d = 0`` for a pair of averagedness parameters."""

    theta1: float
    theta2: float

    def __post_init__(self):
        check_open_unit(self.theta1, "theta1")
        check_open_unit(self.theta2, "theta2")

    @property
    def d(self):
        return (1.0 - 2.0 * self.theta1) * (1.0 - 2.0 * self.theta2)

    def c(self, phi):
        t1, t2 = self.theta1, self.theta2
        return np.cos(phi) * (1.0 - t1) * (1.0 - t2) + t1 * t2


@dataclass(frozen=True, eq=False)
class Polyline:
    """Ordered vertices; a closed polyline implicitly joins the last vertex to the first."""

    vertices: np.ndarray
    closed: bool = False
    _area: float = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=np.complex128).ravel()
        if not np.all(np.isfinite(v)):
            raise ValueError("polyline vertices must be finite")
        if v.size:
            keep = np.ones(v.size, dtype=bool)
            keep[1:] = v[1:] != v[:-1]
            v = v[keep]
            if self.closed and v.size > 1 and v[-1] == v[0]:
                v = v[:-1]
        if self.closed and v.size < 3:
            raise ValueError("a closed polyline needs at least 3 distinct vertices")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return self.vertices.size

    @property
    def signed_area(self):
        """Shoelace area; positive for counterclockwise closed polylines."""
        if self._area is None:
            v = self.vertices
            w = np.roll(v, -1)
            area = 0.5 * float(np.sum(v.real * w.imag - w.real * v.imag))
            object.__setattr__(self, "_area", area)
        return self._area

    def reversed(self):
        return Polyline(self.vertices[::-1], closed=self.closed)

    def distance(self, points):
        """Distance from each point to the nearest segment."""
        pts = np.atleast_1d(np.asarray(points, dtype=np.complex128))
        return kernels.polyline_distances(self.vertices, pts, self.closed)

    def segment_lengths(self):
        v = self.vertices
        nxt = np.roll(v, -1) if self.closed else v[1:]
        return np.abs(nxt - (v if self.closed else v[:-1]))


def oval_roots(q, phi):
    """Real roots of ``r^2 - 2 c(phi) r + d = 0``, ascending.

    A negative root ``r`` at angle ``phi`` is the point ``|r| e^{i(phi + pi)}``,
    which is simply ``r * exp(1j * phi)``.
    """
    c = float(q.c(phi))
    d = q.d
    disc = c * c - d
    if disc < 0.0:
        return []
    if disc == 0.0:
        return [c]
    s = math.sqrt(disc)
    # avoid cancellation in the smaller-magnitude root
    big = c + s if c >= 0.0 else c - s
    small = d / big if big != 0.0 else 0.0
    return sorted([big, small])


def f2_eval(theta1, theta2, z):
    """The envelope quartic ``(|z|^2 - 2x k + d)^2 - 4 theta1^2 theta2^2 |z|^2``."""
    z = np.asarray(z, dtype=np.complex128)
    x, y = z.real, z.imag
    s = x * x + y * y
    k = (1.0 - theta1) * (1.0 - theta2)
    d = (1.0 - 2.0 * theta1) * (1.0 - 2.0 * theta2)
    a = s - 2.0 * x * k + d
    out = a * a - 4.0 * (theta1 * theta2) ** 2 * s
    return out if out.ndim else float(out)


def f2_grad(theta1, theta2, z):
    """Gradient of ``f2_eval`` packed as ``df/dx + 1j * df/dy``."""
    z = np.asarray(z, dtype=np.complex128)
    x, y = z.real, z.imag
    s = x * x + y * y
    k = (1.0 - theta1) * (1.0 - theta2)
    d = (1.0 - 2.0 * theta1) * (1.0 - 2.0 * theta2)
    a = s - 2.0 * x * k + d
    p2 = (theta1 * theta2) ** 2
    gx = 4.0 * a * (x - k) - 8.0 * p2 * x
    gy = 4.0 * a * y - 8.0 * p2 * y
    return gx + 1j * gy


@dataclass(frozen=True)
class CircleFamily:
    """Circles ``|z - center(t)| = radius(t)``, i.e. ``F(t, z) = |z - center|^2 - radius^2``.

    ``dcenter`` and ``dradius`` are the t-derivatives.
    """

    center: object
    dcenter: object
    radius: object
    dradius: object

    def F(self, t, z):
        return abs(z - self.center(t)) ** 2 - self.radius(t) ** 2

    def dF_dt(self, t, z):
        c, dc = self.center(t), self.dcenter(t)
        return -2.0 * ((z - c) * dc.conjugate()).real - 2.0 * self.radius(t) * self.dradius(t)

    def grad_F(self, t, z):
        return 2.0 * (z - self.center(t))

    def grad_dF_dt(self, t, z):
        return -2.0 * complex(self.dcenter(t))

    def seeds(self, t, n):
        a = np.arange(n) * (2.0 * np.pi / n) + 0.1
        return self.center(t) + self.radius(t) * np.exp(1j * a)


def step1_family(theta1, theta2):
    """The circles ``z2(t) * Circ(theta1)`` for ``z2(t) = 1 - theta2 + theta2 e^{it}``."""
    theta1 = check_open_unit(theta1, "theta1")
    theta2 = check_open_unit(theta2, "theta2")
    c1 = 1.0 - theta1

    def z2(t):
        return 1.0 - theta2 + theta2 * complex(math.cos(t), math.sin(t))

    def dz2(t):
        return theta2 * complex(-math.sin(t), math.cos(t))

    def dmod(t):
        # d|z2|/dt = Re(dz2 * conj(z2)) / |z2|
        w = z2(t)
        return (dz2(t) * w.conjugate()).real / abs(w)

    return CircleFamily(
        center=lambda t: c1 * z2(t),
        dcenter=lambda t: c1 * dz2(t),
        radius=lambda t: theta1 * abs(z2(t)),
        dradius=lambda t: theta1 * dmod(t),
    )


@dataclass
class Envelope:
    points: np.ndarray
    params: np.ndarray
    failed_t: list

    @property
    def n_failed(self):
        return len(self.failed_t)


def _fd_grad(fun, t, z, h=1e-7):
    hx = h * max(1.0, abs(z.real))
    hy = h * max(1.0, abs(z.imag))
    gx = (fun(t, z + hx) - fun(t, z - hx)) / (2 * hx)
    gy = (fun(t, z + 1j * hy) - fun(t, z - 1j * hy)) / (2 * hy)
    return complex(gx, gy)


def envelope_points(family, t_grid, n_seeds=8, tol=1e-10, max_iter=50, merge_tol=1e-8):
    """Solve ``F(t, z) = 0, dF/dt(t, z) = 0`` for z at each t by Newton's method.

    Seeds are spread over the member curve C_t (``family.seeds``). The family may
    provide ``grad_F`` / ``grad_dF_dt``; central differences are used otherwise.
    t values where no seed converges are listed in ``failed_t``.
    """
    grad_F = getattr(family, "grad_F", None) or (lambda t, z: _fd_grad(family.F, t, z))
    grad_G = getattr(family, "grad_dF_dt", None) or (lambda t, z: _fd_grad(family.dF_dt, t, z))
    pts, params, failed = [], [], []
    for t in np.asarray(t_grid, dtype=float):
        found = []
        for z in family.seeds(t, n_seeds):
            z = complex(z)
            for _ in range(max_iter):
                f, g = family.F(t, z), family.dF_dt(t, z)
                gf, gg = grad_F(t, z), grad_G(t, z)
                det = gf.real * gg.imag - gf.imag * gg.real
                if det == 0.0 or not math.isfinite(det):
                    break
                dx = (f * gg.imag - g * gf.imag) / det
                dy = (gf.real * g - gg.real * f) / det
                z -= complex(dx, dy)
                if math.hypot(dx, dy) < tol:
                    if all(abs(z - w) > merge_tol for w in found):
                        found.append(z)
                    break
        if found:
            pts.extend(found)
            params.extend([t] * len(found))
        else:
            failed.append(float(t))
    return Envelope(np.array(pts, dtype=np.complex128), np.array(params), failed)


def curvature_at(r0, dr, d2r):
    """Curvature of a polar curve r(phi) from r, dr/dphi and d2r/dphi2."""
    if r0 == 0.0 and dr == 0.0:
        raise ValueError("curvature undefined where r = dr/dphi = 0")
    return (r0 * r0 + 2.0 * dr * dr - r0 * d2r) / (r0 * r0 + dr * dr) ** 1.5


def winding_numbers(curve, points, on_curve_tol=1e-12, residual_tol=1e-6):
    """Winding numbers of a closed polyline around each of ``points``."""
    if not curve.closed:
        raise ValueError("winding number needs a closed polyline")
    pts = np.atleast_1d(np.asarray(points, dtype=np.complex128))
    total, dist = kernels.winding_sums(curve.vertices, pts)
    if np.any(dist <= on_curve_tol):
        bad = pts[np.argmin(dist)]
        raise ValueError(f"point {bad!r} lies on the curve")
    turns = total / (2.0 * np.pi)
    w = np.rint(turns)
    residual = np.abs(turns - w)
    if np.any(residual >= residual_tol):
        raise ValueError(f"winding sum not near an integer (residual {residual.max():.3g})")
    return w.astype(int)


def winding_number(curve, z, on_curve_tol=1e-12):
    return int(winding_numbers(curve, [z], on_curve_tol)[0])


def min_circle_through_one(points, tol=1e-12):
    """Radius of the smallest real-centered disk through 1 containing every point.

    For a disk centered at ``1 - rho`` the condition ``|p - (1 - rho)| <= rho``
    expands to ``rho >= |p - 1|^2 / (2 (1 - Re p))``. Points within ``tol`` of 1
    impose nothing.
    """
    p = np.atleast_1d(np.asarray(points, dtype=np.complex128)).ravel()
    p = p[np.abs(p - 1.0) > tol]
    if p.size == 0:
        return 0.0
    gap = 1.0 - p.real
    if np.any(gap <= 0.0):
        bad = p[np.argmin(gap)]
        raise ValueError(f"no circle through 1 with real center encloses {bad!r}")
    return float(np.max(np.abs(p - 1.0) ** 2 / (2.0 * gap)))


def _project_to_curve(points, curve, dcurve, d2curve, t_samples, newton=8):
    """Distance from each point to the parametric curve, by nearest sample then Newton in t."""
    from scipy.spatial import cKDTree

    c = curve(t_samples)
    tree = cKDTree(np.column_stack([c.real, c.imag]))
    pts = np.asarray(points, dtype=np.complex128)
    d0, idx = tree.query(np.column_stack([pts.real, pts.imag]))
    t = t_samples[idx]
    for _ in range(newton):
        diff = curve(t) - pts
        d1, d2 = dcurve(t), d2curve(t)
        g = (diff * d1.conjugate()).real
        h = np.abs(d1) ** 2 + (diff * d2.conjugate()).real
        ok = h > 0
        t = np.where(ok, t - g / np.where(ok, h, 1.0), t)
    return np.minimum(d0, np.abs(curve(t) - pts))


def hausdorff_to_curve(poly, curve, dcurve, d2curve, t_samples, per_segment=4):
    """Two-sided Hausdorff distance between a polyline and a parametric curve.

    ``curve(t)`` and its derivatives are vectorized callables; ``t_samples``
    should resolve every feature of the curve (dense near cusps). The polyline
    side is probed at ``per_segment`` points per segment, the curve side at
    the sample parameters.
    """
    v = poly.vertices
    nxt = np.roll(v, -1) if poly.closed else v[1:]
    base = v if poly.closed else v[:-1]
    s = np.arange(per_segment) / per_segment
    probes = (base[:, None] + s[None, :] * (nxt - base)[:, None]).ravel()
    t_samples = np.asarray(t_samples, dtype=float)
    d_poly = _project_to_curve(probes, curve, dcurve, d2curve, t_samples).max()
    d_curve = _near_polyline_distance(poly, curve(t_samples), k=8).max()
    return float(max(d_poly, d_curve))


def _near_polyline_distance(poly, points, k=8):
    """Distance to the polyline, checking only segments at the k nearest vertices."""
    from scipy.spatial import cKDTree

    v = poly.vertices
    n = v.size
    tree = cKDTree(np.column_stack([v.real, v.imag]))
    pts = np.asarray(points, dtype=np.complex128)
    _, idx = tree.query(np.column_stack([pts.real, pts.imag]), k=min(k, n))
    idx = np.atleast_2d(idx.T).T
    best = np.full(pts.size, np.inf)
    for shift in (0, -1):
        a_i = idx + shift
        b_i = a_i + 1
        if poly.closed:
            a_i, b_i = a_i % n, b_i % n
        else:
            keep = (a_i >= 0) & (b_i < n)
            a_i, b_i = np.clip(a_i, 0, n - 1), np.clip(b_i, 0, n - 1)
        a, b = v[a_i], v[b_i]
        ab = b - a
        l2 = np.abs(ab) ** 2
        p = pts[:, None]
        t = np.clip(((p - a) * ab.conjugate()).real / np.where(l2 > 0, l2, 1.0), 0.0, 1.0)
        d = np.abs(p - a - t * ab)
        if not poly.closed:
            d = np.where(keep, d, np.inf)
        best = np.minimum(best, d.min(axis=1))
    return best
