"""Numpy implementations of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable. Every function
here has a twin with the same signature in ``_kernels.pyx``; the two are
checked against each other in the test suite.
"""

import numpy as np

_CHUNK = 1 << 22  # max elements of one pairwise work array


def _segments(vertices, closed):
    a = vertices
    b = np.roll(vertices, -1) if closed else vertices[1:]
    if not closed:
        a = vertices[:-1]
    return a, b


def polyline_distances(vertices, points, closed=True):
    """Distance from each point to the nearest segment of the polyline."""
    vertices = np.ascontiguousarray(vertices, dtype=np.complex128)
    points = np.ascontiguousarray(points, dtype=np.complex128)
    a, b = _segments(vertices, closed)
    ab = b - a
    ab2 = (ab.real ** 2 + ab.imag ** 2)
    ab2 = np.where(ab2 > 0.0, ab2, 1.0)
    out = np.empty(points.shape[0])
    step = max(1, _CHUNK // max(1, a.shape[0]))
    for s in range(0, points.shape[0], step):
        p = points[s:s + step, None]
        ap = p - a[None, :]
        t = (ap.real * ab.real + ap.imag * ab.imag) / ab2
        np.clip(t, 0.0, 1.0, out=t)
        d = np.abs(ap - t * ab)
        out[s:s + step] = d.min(axis=1)
    return out


def winding_sums(vertices, points):
    """Total signed turning angle (radians) of a closed polyline about each point,
    plus the distance from each point to the polyline."""
    vertices = np.ascontiguousarray(vertices, dtype=np.complex128)
    points = np.ascontiguousarray(points, dtype=np.complex128)
    nxt = np.roll(vertices, -1)
    out = np.empty(points.shape[0])
    step = max(1, _CHUNK // max(1, vertices.shape[0]))
    for s in range(0, points.shape[0], step):
        p = points[s:s + step, None]
        out[s:s + step] = np.angle((nxt[None, :] - p) / (vertices[None, :] - p)).sum(axis=1)
    return out, polyline_distances(vertices, points, True)


def _margin(z, w, c1, theta1):
    # signed distance from z to the disk w*Disk(theta1) (center c1*w, radius theta1*|w|)
    return np.abs(z - c1 * w) - theta1 * np.abs(w)


def product_grid_margin(points, theta1, theta2, n_rad=256, n_ang=256, levels=2, n_refine=16):
    """Grid search for w in Disk(theta2) minimizing the distance from z to w*Disk(theta1).

    Returns the smallest margin found for each point (<= 0 means a factorization
    z = z1*w with z1 in Disk(theta1) was found) and the best w.
    """
    points = np.ascontiguousarray(points, dtype=np.complex128)
    c1, c2 = 1.0 - theta1, 1.0 - theta2
    rho = np.linspace(0.0, theta2, n_rad)
    alpha = np.arange(n_ang) * (2.0 * np.pi / n_ang)
    drho = rho[1] - rho[0]
    dalpha = alpha[1] - alpha[0]
    grid = (c2 + rho[:, None] * np.exp(1j * alpha[None, :])).ravel()

    margins = np.empty(points.shape[0])
    best_w = np.empty(points.shape[0], dtype=np.complex128)
    step = max(1, _CHUNK // grid.shape[0])
    u = np.linspace(-1.0, 1.0, n_refine)
    for s in range(0, points.shape[0], step):
        z = points[s:s + step]
        m = _margin(z[:, None], grid[None, :], c1, theta1)
        k = m.argmin(axis=1)
        best = m[np.arange(z.shape[0]), k]
        r0 = rho[k // n_ang]
        a0 = alpha[k % n_ang]
        dr, da = drho, dalpha
        for _ in range(levels):
            rr = np.clip(r0[:, None] + dr * u[None, :], 0.0, theta2)
            aa = a0[:, None] + da * u[None, :]
            w = c2 + rr[:, :, None] * np.exp(1j * aa[:, None, :])
            mm = _margin(z[:, None, None], w, c1, theta1).reshape(z.shape[0], -1)
            kk = mm.argmin(axis=1)
            cand = mm[np.arange(z.shape[0]), kk]
            better = cand < best
            best = np.where(better, cand, best)
            r0 = np.where(better, rr[np.arange(z.shape[0]), kk // n_refine], r0)
            a0 = np.where(better, aa[np.arange(z.shape[0]), kk % n_refine], a0)
            dr *= 2.0 / (n_refine - 1)
            da *= 2.0 / (n_refine - 1)
        margins[s:s + step] = best
        best_w[s:s + step] = c2 + r0 * np.exp(1j * a0)
    return margins, best_w
