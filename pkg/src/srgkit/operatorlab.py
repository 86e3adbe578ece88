"""Plane realizations of operators and brute-force sampling oracles.

Linear maps of R^2 stand in for operators. Scaled rotations commute and
multiply like complex numbers, which is what lets the sampled SRG points be
compared against the analytic regions of ``srgcore``.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy.spatial import cKDTree

from .planegeom import DiskRegion, check_open_unit
from .srgcore import CompositionOvalRegion, DysClass, dys_map, _dys_construct_arrays

EIG_TOL = 1e-12
CHUNK = 1 << 16  # samples per independently seeded slice


@dataclass(frozen=True, eq=False)
class LinearPlaneOperator:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __call__(self, x):
        return self.matrix @ np.asarray(x, dtype=float)

    def __matmul__(self, other):
        return LinearPlaneOperator(self.matrix @ other.matrix)

    @property
    def sym(self):
        return 0.5 * (self.matrix + self.matrix.T)

    def is_monotone(self, tol=EIG_TOL):
        s = self.sym
        tr, det = np.trace(s), np.linalg.det(s)
        # both eigenvalues >= -tol
        lo = 0.5 * (tr - math.sqrt(max(tr * tr - 4 * det, 0.0)))
        return lo >= -tol

    def is_scaled_rotation(self, tol=1e-12):
        (a, b), (c, d) = self.matrix
        return abs(a - d) <= tol and abs(b + c) <= tol

    def as_complex(self):
        """The complex number of a scaled rotation [[a, -b], [b, a]] is a + ib."""
        if not self.is_scaled_rotation():
            raise ValueError("not a scaled rotation")
        return complex(self.matrix[0, 0], self.matrix[1, 0])

    def is_cocoercive(self, beta, tol=EIG_TOL):
        """<Cx, x> >= beta |Cx|^2 for all x, i.e. sym(C) - beta C^T C is PSD."""
        m = self.matrix
        s = self.sym - beta * (m.T @ m)
        return np.linalg.eigvalsh(s).min() >= -tol


@dataclass(frozen=True)
class SrgSample:
    magnitude: float
    angle: float

    @property
    def point(self):
        return self.magnitude * complex(math.cos(self.angle), math.sin(self.angle))

    @property
    def conjugate(self):
        return self.point.conjugate()


def scaled_rotation(z):
    z = complex(z)
    return LinearPlaneOperator([[z.real, -z.imag], [z.imag, z.real]])


def averaged_from_contraction(theta, n):
    theta = check_open_unit(theta)
    n = complex(n)
    if abs(n) > 1.0 + 1e-12:
        raise ValueError(f"|n| must be at most 1, got {abs(n)!r}")
    return LinearPlaneOperator((1.0 - theta) * np.eye(2) + theta * scaled_rotation(n).matrix)


def resolvent_linear(m, gamma):
    a = np.eye(2) + gamma * m.matrix
    if abs(np.linalg.det(a)) <= 1e-12:
        raise ValueError("I + gamma*M is singular")
    return LinearPlaneOperator(np.linalg.inv(a))


def dys_assemble(A, B, C, gamma, beta=None, check=True):
    """Davis-Yin operator x -> x - J_gB x + J_gA(2 J_gB x - x - g C J_gB x) as a matrix.

    With ``check`` the hypotheses are validated: A and B monotone and, if
    ``beta`` is given, C beta-cocoercive.
    """
    if check:
        if not A.is_monotone():
            raise ValueError("A is not monotone")
        if not B.is_monotone():
            raise ValueError("B is not monotone")
        if beta is not None and not C.is_cocoercive(beta):
            raise ValueError(f"C is not {beta}-cocoercive")
    ja = resolvent_linear(A, gamma).matrix
    jb = resolvent_linear(B, gamma).matrix
    eye = np.eye(2)
    t = eye - jb + ja @ (2.0 * jb - eye - gamma * C.matrix @ jb)
    return LinearPlaneOperator(t)


def srg_points_of_linear(m, n_directions=360):
    """SRG samples (|Mu|, angle(Mu, u)) over unit vectors u on a uniform half-circle grid.

    The ratio and angle are invariant under u -> -u, so a half circle suffices.
    """
    if n_directions < 1:
        raise ValueError("n_directions must be positive")
    a = np.arange(n_directions) * (np.pi / n_directions)
    u = np.stack([np.cos(a), np.sin(a)])
    mu = m.matrix @ u
    mag = np.hypot(mu[0], mu[1])
    cross = u[0] * mu[1] - u[1] * mu[0]
    dot = u[0] * mu[0] + u[1] * mu[1]
    ang = np.abs(np.arctan2(cross, dot))
    return [SrgSample(float(r), float(t)) for r, t in zip(mag, ang)]


# ------------------------------------------------- sampling


def uniform_disk(rng, center, radius, n):
    r = radius * np.sqrt(rng.random(n))
    t = 2.0 * np.pi * rng.random(n)
    return center + r * np.exp(1j * t)


def _chunked(n, seed, draw):
    """Concatenate draw(rng, size) over fixed slices, slice k seeded with (seed, k)."""
    parts = []
    for k, start in enumerate(range(0, n, CHUNK)):
        rng = np.random.default_rng([seed, k])
        parts.append(draw(rng, min(CHUNK, n - start)))
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.complex128)


def boundary_sweep_composition(theta1, theta2, n_angles=512):
    a = np.arange(n_angles) * (2.0 * np.pi / n_angles)
    z1 = 1.0 - theta1 + theta1 * np.exp(1j * a)
    z2 = 1.0 - theta2 + theta2 * np.exp(1j * a)
    return (z1[:, None] * z2[None, :]).ravel()


def sample_composition_product(theta1, theta2, n, seed, sweep=512):
    """Products of uniform draws from Disk(theta1) and Disk(theta2), plus the Circ x Circ sweep."""
    theta1 = check_open_unit(theta1, "theta1")
    theta2 = check_open_unit(theta2, "theta2")

    def draw(rng, size):
        z1 = uniform_disk(rng, 1.0 - theta1, theta1, size)
        z2 = uniform_disk(rng, 1.0 - theta2, theta2, size)
        return z1 * z2

    rand = _chunked(int(n), seed, draw)
    if not sweep:
        return rand
    return np.concatenate([rand, boundary_sweep_composition(theta1, theta2, sweep)])


def sample_dys_region(beta, gamma, n, seed, sweep=1024, layers=64):
    """Images of the scalar Davis-Yin map on uniform draws, plus a deterministic sweep.

    z1, z2 are uniform on Disk(1/2) and z3 uniform on (1/beta)Disk(1/2). The
    sweep is the boundary construction (``sweep`` angles) shrunk toward the
    center of the parameter domain in ``layers`` steps; see ``dys_sweep_images``.
    """
    cls = DysClass(beta, gamma)

    def draw(rng, size):
        z1 = uniform_disk(rng, 0.5, 0.5, size)
        z2 = uniform_disk(rng, 0.5, 0.5, size)
        z3 = uniform_disk(rng, 0.5 / beta, 0.5 / beta, size)
        return dys_map(z1, z2, z3, gamma)

    rand = _chunked(int(n), seed, draw)
    if not sweep:
        return rand
    return np.concatenate([rand, dys_sweep_images(cls, sweep, layers)])


def dys_sweep_images(cls, n=4096, layers=1):
    """Images of the construction with z1 = z2 = cos(t) e^{it} and its contractions.

    Layer s (s = 1/layers, ..., 1) maps the parameter triple q(t) to
    q0 + s (q(t) - q0) with q0 = (1/2, 1/2, 1/(2 beta)), the center of the
    convex parameter domain, so every image is a genuine member of the region.
    The last layer (s = 1) lies on the boundary circle; the others fill the inside.
    """
    theta = -np.pi / 2 + np.pi * np.arange(n) / n
    a1, _, _, _, _, _, _, z3 = _dys_construct_arrays(cls, theta)
    s = (np.arange(1, layers + 1) / layers)[:, None]
    c1, c3 = 0.5, 0.5 / cls.beta
    z1 = c1 + s * (a1 - c1)
    z3 = c3 + s * (z3 - c3)
    return dys_map(z1, z1, z3, cls.gamma).ravel()


# ------------------------------------------------- reports


@dataclass
class VerificationReport:
    n_samples: int
    containment_violations: list
    coverage_gap: float
    max_signed_distance: float
    eps: float
    tol: float
    seed: object = None
    n_probes: int = 0
    gap_witness: complex = None
    extra: dict = field(default_factory=dict)

    @property
    def contained(self):
        return not self.containment_violations

    @property
    def covered(self):
        return self.coverage_gap <= self.eps

    @property
    def passed(self):
        return self.contained and self.covered


def _target_margin(target, z):
    """Signed inside-ness: >= 0 inside, roughly the distance to the boundary outside."""
    if isinstance(target, DiskRegion):
        return -target.signed_distance(z)
    if isinstance(target, CompositionOvalRegion):
        return np.asarray(target.margin(z))
    raise TypeError(f"unsupported target {type(target).__name__}")


def _target_bbox(target):
    if isinstance(target, DiskRegion):
        c, r = target.center, target.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r
    return target.bbox()


def coverage_report(samples, target, probe_resolution=64, eps=0.02, tol=1e-9, seed=None,
                    max_violations=20):
    """Containment of samples in ``target`` and how densely they fill it.

    The coverage gap is the largest distance from a probe point inside the
    target (probe grid of ``probe_resolution`` squared over its bounding box)
    to the nearest sample.
    """
    z = np.asarray(samples, dtype=np.complex128).ravel()
    margin = _target_margin(target, z)
    bad = np.flatnonzero(margin < -tol)
    order = bad[np.argsort(margin[bad])][:max_violations]
    violations = [(complex(z[i]), float(-margin[i])) for i in order]
    max_sd = float(-margin.min()) if z.size else -math.inf

    x0, x1, y0, y1 = _target_bbox(target)
    xs = np.linspace(x0, x1, probe_resolution)
    ys = np.linspace(y0, y1, probe_resolution)
    probes = (xs[None, :] + 1j * ys[:, None]).ravel()
    probes = probes[_target_margin(target, probes) >= 0.0]
    gap, witness = 0.0, None
    if probes.size and z.size:
        tree = cKDTree(np.column_stack([z.real, z.imag]))
        d, _ = tree.query(np.column_stack([probes.real, probes.imag]))
        k = int(np.argmax(d))
        gap, witness = float(d[k]), complex(probes[k])
    elif probes.size:
        gap = math.inf
    return VerificationReport(
        n_samples=int(z.size),
        containment_violations=violations,
        coverage_gap=gap,
        max_signed_distance=max_sd,
        eps=eps,
        tol=tol,
        seed=seed,
        n_probes=int(probes.size),
        gap_witness=witness,
        extra={"n_violations": int(bad.size)},
    )
