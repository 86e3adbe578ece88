# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_kernels_py``.

Signatures and semantics match the numpy module one-for-one.
"""

import numpy as np

from libc.math cimport sqrt, atan2, cos, sin, M_PI


cdef inline double _seg_dist(double px, double py, double ax, double ay,
                             double bx, double by) nogil:
    cdef double ex = bx - ax, ey = by - ay
    cdef double l2 = ex * ex + ey * ey
    cdef double t = 0.0, dx, dy
    if l2 > 0.0:
        t = ((px - ax) * ex + (py - ay) * ey) / l2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    dx = px - ax - t * ex
    dy = py - ay - t * ey
    return sqrt(dx * dx + dy * dy)


def polyline_distances(vertices, points, bint closed=True):
    cdef double[:, ::1] v = np.ascontiguousarray(
        np.column_stack([np.real(vertices), np.imag(vertices)]), dtype=np.float64)
    cdef double[:, ::1] p = np.ascontiguousarray(
        np.column_stack([np.real(points), np.imag(points)]), dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0], m = p.shape[0], i, k, kn, nseg
    out_arr = np.empty(m)
    cdef double[::1] out = out_arr
    cdef double best, d
    nseg = n if closed else n - 1
    with nogil:
        for i in range(m):
            best = 1e300
            for k in range(nseg):
                kn = k + 1
                if kn == n:
                    kn = 0
                d = _seg_dist(p[i, 0], p[i, 1], v[k, 0], v[k, 1], v[kn, 0], v[kn, 1])
                if d < best:
                    best = d
            out[i] = best
    return out_arr


def winding_sums(vertices, points):
    cdef double[:, ::1] v = np.ascontiguousarray(
        np.column_stack([np.real(vertices), np.imag(vertices)]), dtype=np.float64)
    cdef double[:, ::1] p = np.ascontiguousarray(
        np.column_stack([np.real(points), np.imag(points)]), dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0], m = p.shape[0], i, k, kn
    total_arr = np.empty(m)
    dist_arr = np.empty(m)
    cdef double[::1] total = total_arr
    cdef double[::1] dist = dist_arr
    cdef double ax, ay, bx, by, s, best, d
    with nogil:
        for i in range(m):
            s = 0.0
            best = 1e300
            for k in range(n):
                kn = k + 1
                if kn == n:
                    kn = 0
                ax = v[k, 0] - p[i, 0]
                ay = v[k, 1] - p[i, 1]
                bx = v[kn, 0] - p[i, 0]
                by = v[kn, 1] - p[i, 1]
                # arg(b / a)
                s += atan2(ax * by - ay * bx, ax * bx + ay * by)
                d = _seg_dist(p[i, 0], p[i, 1], v[k, 0], v[k, 1], v[kn, 0], v[kn, 1])
                if d < best:
                    best = d
            total[i] = s
            dist[i] = best
    return total_arr, dist_arr


cdef inline double _margin(double zx, double zy, double wx, double wy,
                           double c1, double theta1) nogil:
    cdef double dx = zx - c1 * wx, dy = zy - c1 * wy
    return sqrt(dx * dx + dy * dy) - theta1 * sqrt(wx * wx + wy * wy)


def product_grid_margin(points, double theta1, double theta2, int n_rad=256,
                        int n_ang=256, int levels=2, int n_refine=16):
    cdef double[:, ::1] p = np.ascontiguousarray(
        np.column_stack([np.real(points), np.imag(points)]), dtype=np.float64)
    cdef Py_ssize_t m = p.shape[0], i, a, b, lev
    cdef double c1 = 1.0 - theta1, c2 = 1.0 - theta2
    cdef double drho = theta2 / (n_rad - 1)
    cdef double dalpha = 2.0 * M_PI / n_ang
    cdef double[::1] ca = np.cos(np.arange(n_ang) * dalpha)
    cdef double[::1] sa = np.sin(np.arange(n_ang) * dalpha)
    margins_arr = np.empty(m)
    wre_arr = np.empty(m)
    wim_arr = np.empty(m)
    cdef double[::1] margins = margins_arr
    cdef double[::1] wre = wre_arr
    cdef double[::1] wim = wim_arr
    cdef double best, mm, rho, r0, a0, dr, da, rr, aa, cand, uu
    cdef double br, ba
    cdef Py_ssize_t ka, kr
    with nogil:
        for i in range(m):
            best = 1e300
            r0 = 0.0
            a0 = 0.0
            for a in range(n_rad):
                rho = a * drho
                if a == n_rad - 1:
                    rho = theta2
                for b in range(n_ang):
                    mm = _margin(p[i, 0], p[i, 1], c2 + rho * ca[b], rho * sa[b], c1, theta1)
                    if mm < best:
                        best = mm
                        r0 = rho
                        a0 = b * dalpha
            dr = drho
            da = dalpha
            for lev in range(levels):
                cand = 1e300
                br = r0
                ba = a0
                for kr in range(n_refine):
                    uu = -1.0 + 2.0 * kr / (n_refine - 1)
                    rr = r0 + dr * uu
                    if rr < 0.0:
                        rr = 0.0
                    elif rr > theta2:
                        rr = theta2
                    for ka in range(n_refine):
                        uu = -1.0 + 2.0 * ka / (n_refine - 1)
                        aa = a0 + da * uu
                        mm = _margin(p[i, 0], p[i, 1], c2 + rr * cos(aa), rr * sin(aa), c1, theta1)
                        if mm < cand:
                            cand = mm
                            br = rr
                            ba = aa
                if cand < best:
                    best = cand
                    r0 = br
                    a0 = ba
                dr = dr * 2.0 / (n_refine - 1)
                da = da * 2.0 / (n_refine - 1)
            margins[i] = best
            wre[i] = c2 + r0 * cos(a0)
            wim[i] = r0 * sin(a0)
    return margins_arr, wre_arr + 1j * wim_arr
