"""Fixed-point iteration harness.

Checks observed residuals of averaged maps against the O(1/k) bound implied
by their averagedness coefficient, and solves small monotone inclusions with
Davis-Yin splitting.
"""

from dataclasses import dataclass
import math

import numpy as np

from .operatorlab import dys_assemble, resolvent_linear


@dataclass
class IterationTrace:
    iterates: np.ndarray  # (K, 2), x_0 .. x_{K-1}
    residuals: np.ndarray  # |x_k - T x_k|
    theta_claimed: float = None
    x_star: np.ndarray = None
    K: int = 0
    x_last: np.ndarray = None  # x_K


def _as_map(T):
    if hasattr(T, "matrix"):
        m = T.matrix
        return lambda x: m @ x
    return T


def iterate(T, x0, K, theta_claimed=None, x_star=None):
    """Run x_{k+1} = T x_k for K steps, recording iterates and residuals."""
    if K < 1:
        raise ValueError("K must be at least 1")
    f = _as_map(T)
    x = np.asarray(x0, dtype=float).copy()
    xs = np.empty((K, x.size))
    res = np.empty(K)
    for k in range(K):
        tx = np.asarray(f(x), dtype=float)
        if not np.all(np.isfinite(tx)):
            raise FloatingPointError(f"non-finite iterate at k={k + 1}")
        xs[k] = x
        res[k] = np.linalg.norm(x - tx)
        x = tx
    if x_star is not None:
        x_star = np.asarray(x_star, dtype=float)
    return IterationTrace(xs, res, theta_claimed, x_star, K, x)


@dataclass
class RateReport:
    theta: float
    ratios: np.ndarray  # residual^2 / bound
    max_ratio: float
    first_violation: int  # -1 if none
    dist0: float  # |x0 - x*| used in the bound
    slack: float
    monotone: bool

    @property
    def holds(self):
        return self.first_violation < 0

    @property
    def normalized_max(self):
        """max_k residual^2 (k+1)(1-theta)/theta; the bound says this is <= dist0^2."""
        return self.max_ratio * self.dist0 ** 2


def nearest_fixed_point(matrix, x0, tol=1e-12):
    """Orthogonal projection of x0 onto ker(I - M), the fixed points of a linear map."""
    m = np.asarray(matrix, dtype=float)
    _, sv, vt = np.linalg.svd(np.eye(m.shape[0]) - m)
    basis = vt[sv <= tol * max(1.0, sv.max())]
    x0 = np.asarray(x0, dtype=float)
    return basis.T @ (basis @ x0)


def estimate_fixed_point(T, x0, K):
    """Run 10K steps; returns (final iterate, its residual) as x* estimate and slack."""
    tr = iterate(T, x0, 10 * K)
    x = tr.x_last
    return x, float(np.linalg.norm(x - np.asarray(_as_map(T)(x))))


def residual_rate_check(trace, theta=None, T=None, rel_tol=1e-12):
    """Check |x_k - T x_k|^2 <= theta |x0 - x*|^2 / ((1 - theta)(k + 1)) for every k.

    This is the Krasnosel'skii-Mann telescoping bound for theta-averaged maps.
    If the trace carries no x*, it is estimated by running 10x longer (``T`` is
    then required) and the residual at the estimate is added to |x0 - x*| as slack.
    """
    theta = trace.theta_claimed if theta is None else theta
    if theta is None or not (0.0 < theta < 1.0):
        raise ValueError("a claimed theta in (0,1) is required")
    x0 = trace.iterates[0]
    slack = 0.0
    if trace.x_star is not None:
        x_star = trace.x_star
    else:
        if T is None:
            raise ValueError("x_star unknown; pass T to estimate it")
        x_star, slack = estimate_fixed_point(T, x0, trace.K)
    dist0 = float(np.linalg.norm(x0 - x_star)) + slack
    k = np.arange(trace.K)
    r2 = trace.residuals ** 2
    if dist0 == 0.0:
        ratios = np.where(r2 > 0, np.inf, 0.0)
    else:
        bound = theta * dist0 ** 2 / ((1.0 - theta) * (k + 1))
        ratios = r2 / bound
    bad = np.flatnonzero(ratios > 1.0 + rel_tol)
    mono = bool(np.all(np.diff(trace.residuals) <= 1e-12 * max(1.0, trace.residuals[0])))
    return RateReport(theta, ratios, float(ratios.max()), int(bad[0]) if bad.size else -1,
                      dist0, slack, mono)


@dataclass
class InclusionReport:
    z: np.ndarray
    inclusion_residual: float  # |(A + B + C) z|
    fixed_point_residual: float  # |x - T x| at the final x
    iterations: int
    condition_factor: float  # gamma / |I + gamma A|_2
    tol: float
    converged: bool

    @property
    def certified(self):
        return self.inclusion_residual <= self.tol


def dys_solve_inclusion(A, B, C, beta, gamma, x0, K=10_000, tol=1e-8):
    """Find a zero of A + B + C through the Davis-Yin fixed-point iteration.

    For linear operators gamma (A + B + C) z = (I + gamma A)(x - T x) with
    z = J_{gamma B} x, so |x - T x| <= tol * c with c = gamma / |I + gamma A|_2
    guarantees |(A + B + C) z| <= tol. The iteration stops there or after K steps.
    """
    if not (beta > 0.0 and 0.0 < gamma < 2.0 * beta):
        raise ValueError(f"need beta > 0 and gamma in (0, 2*beta), got beta={beta}, gamma={gamma}")
    T = dys_assemble(A, B, C, gamma, beta=beta).matrix
    jb = resolvent_linear(B, gamma).matrix
    c = gamma / np.linalg.norm(np.eye(2) + gamma * A.matrix, 2)
    x = np.asarray(x0, dtype=float).copy()
    target = tol * c
    fp = math.inf
    k = 0
    for k in range(1, K + 1):
        tx = T @ x
        fp = float(np.linalg.norm(x - tx))
        if fp <= target:
            break
        x = tx
        if not np.all(np.isfinite(x)):
            raise FloatingPointError(f"non-finite iterate at k={k}")
    z = jb @ x
    s = A.matrix + B.matrix + C.matrix
    return InclusionReport(z, float(np.linalg.norm(s @ z)), fp, k, float(c), tol, fp <= target)
