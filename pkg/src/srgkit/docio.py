"""Deterministic JSON, CSV and SVG writers for region and report documents.

Floats are written with 17 significant digits so every value round-trips
exactly; no timestamps or other run-dependent data are emitted.
"""

import json
import math

import numpy as np

FLOAT_FMT = "%.17g"


def _num(x):
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    s = FLOAT_FMT % x
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_num(obj.real)}, {_num(obj.imag)}]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        flat = all(isinstance(v, (int, float, np.integer, np.floating)) for v in obj)
        if flat:
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    return _encode(obj, indent, 0) + "\n"


def points_to_pairs(z):
    z = np.asarray(z, dtype=np.complex128).ravel()
    return [[float(p.real), float(p.imag)] for p in z]


def pairs_to_points(pairs):
    a = np.asarray(pairs, dtype=float).reshape(-1, 2)
    return a[:, 0] + 1j * a[:, 1]


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def trace_csv(rows):
    """rows: iterable of (k, x, y, residual, bound)."""
    lines = ["k,x,y,residual,bound"]
    for k, x, y, r, b in rows:
        lines.append(f"{int(k)},{_num(x)},{_num(y)},{_num(r)},{_num(b)}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------- SVG

SVG_SIZE = 800
SVG_WINDOW = 1.1  # world coordinates [-1.1, 1.1]^2


def _px(z):
    s = SVG_SIZE / (2 * SVG_WINDOW)
    return (np.real(z) + SVG_WINDOW) * s, (SVG_WINDOW - np.imag(z)) * s


def _path(z):
    x, y = _px(np.asarray(z))
    pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(x, y))
    return f"M {pts} Z"


def region_svg(boundary, circle=None, version="", max_vertices=4000):
    """Filled region with an optional dashed circle (center, radius), axes through 0."""
    z = np.asarray(boundary, dtype=np.complex128)
    if z.size > max_vertices:
        step = int(math.ceil(z.size / max_vertices))
        z = z[::step]
    s = SVG_SIZE / (2 * SVG_WINDOW)
    ox, oy = _px(0.0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- srgkit {version} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<path d="{_path(z)}" fill="#b8c8dc" stroke="none"/>',
        f'<line x1="0" y1="{oy:.3f}" x2="{SVG_SIZE}" y2="{oy:.3f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{ox:.3f}" y1="0" x2="{ox:.3f}" y2="{SVG_SIZE}" stroke="black" stroke-width="1"/>',
    ]
    if circle is not None:
        c, r = circle
        cx, cy = _px(c)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r * s:.3f}" fill="none" '
                   'stroke="black" stroke-width="1.5" stroke-dasharray="8,6"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
