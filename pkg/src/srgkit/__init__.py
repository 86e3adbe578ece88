"""Scaled relative graph regions of averaged and Davis-Yin operators."""

__version__ = "0.1.0"

from .planegeom import (  # noqa: E402
    ComplexPoint,
    DiskRegion,
    PolarQuadratic,
    Polyline,
    curvature_at,
    f2_eval,
    min_circle_through_one,
    oval_roots,
    winding_number,
)
from .srgcore import (  # noqa: E402
    AveragedClass,
    CocoerciveClass,
    CompositionOvalRegion,
    DysClass,
    composition_region,
    dys_region,
    dys_step2_construct,
    region_contains,
    srg_of_averaged,
    tangency_certificate,
    tight_composition_coeff,
)
from .kernels import backend_name  # noqa: E402
