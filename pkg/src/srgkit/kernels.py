"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the numpy fallback.
``use_backend`` switches explicitly (tests and the benchmark run both).
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

_active = _compiled if _compiled is not None else _kernels_py


def available_backends():
    return sorted(_BACKENDS)


def backend_name():
    return "compiled" if _active is _compiled and _compiled is not None else "python"


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous backend name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    previous = backend_name()
    _active = _BACKENDS[name]
    return previous


def polyline_distances(vertices, points, closed=True):
    return _active.polyline_distances(vertices, points, closed)


def winding_sums(vertices, points):
    return _active.winding_sums(vertices, points)


def product_grid_margin(points, theta1, theta2, n_rad=256, n_ang=256, levels=2, n_refine=16):
    return _active.product_grid_margin(points, theta1, theta2, n_rad, n_ang, levels, n_refine)
