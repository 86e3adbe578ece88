"""Command-line interface: ``srgkit {coeff,region,verify,iterate}``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O failure.
"""

import argparse
import math
import sys

import numpy as np

from . import __version__
from . import docio
from . import iterbench as ib
from . import operatorlab as ol
from . import srgcore as sc

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


def _theta(args, *names):
    out = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise InputError(f"--{name} is required")
        if not (0.0 < v < 1.0):
            raise InputError(f"theta must lie in the open interval (0,1) (got {name}={v!r})")
        out.append(v)
    return out


def _dys_params(args):
    if args.beta is None or args.gamma is None:
        raise InputError("--beta and --gamma are required")
    if not args.beta > 0:
        raise InputError(f"beta must be positive (got {args.beta!r})")
    if not 0 < args.gamma < 2 * args.beta:
        raise InputError(f"gamma must lie in the open interval (0, 2*beta) (got gamma={args.gamma!r}, "
                         f"beta={args.beta!r})")
    return args.beta, args.gamma


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        docio.write_text(path, text)


def _tolerances(args):
    return {"analytic": args.tol_analytic, "mc": args.tol_mc}


# ------------------------------------------------- commands


def cmd_coeff(args):
    t1, t2 = _theta(args, "theta1", "theta2")
    theta = sc.tight_composition_coeff(t1, t2)
    if args.json:
        _emit(docio.dumps({"theta1": t1, "theta2": t2, "theta": theta,
                           "disk": {"center": 1 - theta, "radius": theta}}), "-")
    else:
        print(f"{theta:.12g}")
        print(f"disk center {1 - theta:.12g} radius {theta:.12g}")
    return EXIT_OK


def region_document(args):
    """Build the RegionDocument dict and the (boundary, dashed circle) for SVG."""
    meta = {"tool": {"name": "srgkit", "version": __version__}, "tolerances": _tolerances(args)}
    if args.kind == "composition":
        t1, t2 = _theta(args, "theta1", "theta2")
        reg = sc.composition_region(t1, t2, args.resolution)
        theta = reg.tight_theta
        boundary = reg.boundary.vertices
        meta.update(resolution=args.resolution, max_abs_f2=reg.diagnostics["max_abs_f2"],
                    n_vertices=int(boundary.size),
                    tight_disk={"theta": theta, "center": 1 - theta, "radius": theta})
        doc = {"kind": "composition-oval", "parameters": {"theta1": t1, "theta2": t2}}
        circle = (1 - theta, theta)
    else:
        if args.kind == "dys":
            beta, gamma = _dys_params(args)
            disk = sc.dys_region(sc.DysClass(beta, gamma))
            params = {"beta": beta, "gamma": gamma}
        else:
            (theta,) = _theta(args, "theta")
            disk = sc.DiskRegion.averaged(theta)
            params = {"theta": theta}
        params.update(center=disk.center, radius=disk.radius)
        boundary = disk.boundary(args.resolution).vertices
        meta.update(resolution=args.resolution)
        doc = {"kind": "disk", "parameters": params}
        circle = None
    doc["boundary"] = docio.points_to_pairs(boundary)
    doc["metadata"] = meta
    return doc, boundary, circle


def cmd_region(args):
    doc, boundary, circle = region_document(args)
    _emit(docio.dumps(doc), args.out)
    if args.svg:
        docio.write_text(args.svg, docio.region_svg(boundary, circle, __version__))
    return EXIT_OK


def cmd_verify(args):
    from . import suites

    if args.suite == "composition":
        t1, t2 = _theta(args, "theta1", "theta2")
        rep = suites.composition_suite(t1, t2, args.n, args.seed, args.eps, args.probe,
                                       args.tol_analytic, args.tol_mc, args.resolution)
    elif args.suite == "dys":
        beta, gamma = _dys_params(args)
        rep = suites.dys_suite(beta, gamma, args.n, args.seed, args.eps, args.probe,
                               tol_analytic=args.tol_analytic, tol_mc=args.tol_mc)
    elif args.suite == "tightness":
        t1, t2 = _theta(args, "theta1", "theta2")
        if any(not 0 < d < 1 for d in args.delta):
            raise InputError("delta must lie in (0,1)")
        rep = suites.tightness_suite(t1, t2, tuple(args.delta), args.tol_analytic, args.seed)
    else:
        t1 = t2 = None
        if args.theta1 is not None or args.theta2 is not None:
            t1, t2 = _theta(args, "theta1", "theta2")
        if args.instances < 1 or args.K < 1:
            raise InputError("--instances and --K must be positive")
        rep = suites.rates_suite(args.instances, args.K, args.seed, t1, t2)
    rep["tolerances"] = _tolerances(args)
    _emit(docio.dumps(rep), args.out)
    return EXIT_OK if rep["pass"] else EXIT_FAIL


def _iteration_operator(args):
    if args.operator == "identity":
        (theta,) = _theta(args, "theta")
        return np.eye(2), theta
    if args.operator == "composition":
        t1, t2 = _theta(args, "theta1", "theta2")
        n1 = args.modulus1 * np.exp(1j * args.angle1)
        n2 = args.modulus2 * np.exp(1j * args.angle2)
        if abs(n1) > 1 or abs(n2) > 1:
            raise InputError("contraction moduli must be at most 1")
        m = ol.averaged_from_contraction(t1, n1) @ ol.averaged_from_contraction(t2, n2)
        return m.matrix, sc.tight_composition_coeff(t1, t2)
    beta, gamma = _dys_params(args)
    A, B, C = (ol.scaled_rotation(complex(*v)) for v in (args.a, args.b, args.c))
    try:
        m = ol.dys_assemble(A, B, C, gamma, beta=beta)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return m.matrix, sc.DysClass(beta, gamma).averagedness


def cmd_iterate(args):
    m, theta = _iteration_operator(args)
    if args.K < 1:
        raise InputError("--K must be positive")
    x = np.array(args.x0, dtype=float)
    x_star = ib.nearest_fixed_point(m, x)
    d2 = float(np.sum((x - x_star) ** 2))
    rows, ratio = [], 0.0
    for k in range(args.K):
        tx = m @ x
        r = float(np.linalg.norm(x - tx))
        bound = math.sqrt(theta * d2 / ((1 - theta) * (k + 1)))
        rows.append((k, x[0], x[1], r, bound))
        ratio = max(ratio, r * r * (k + 1) * (1 - theta) / theta)
        if r <= args.fp_tol:
            break
        x = tx
    _emit(docio.trace_csv(rows), args.out)
    msg = f"max_ratio {ratio:.12g} (bound |x0-x*|^2 = {d2:.12g}, theta = {theta:.12g})\n"
    (sys.stderr if args.out in (None, "-") else sys.stdout).write(msg)
    return EXIT_OK


# ------------------------------------------------- parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol-analytic", type=float, default=1e-9)
    common.add_argument("--tol-mc", type=float, default=1e-9)

    p = argparse.ArgumentParser(prog="srgkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"srgkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", parents=[common], help="tight averagedness coefficient of a composition")
    c.add_argument("--theta1", type=float, required=True)
    c.add_argument("--theta2", type=float, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_coeff)

    r = sub.add_parser("region", parents=[common], help="write a region boundary document")
    r.add_argument("--kind", choices=["composition", "dys", "disk"], required=True)
    for name in ("theta1", "theta2", "theta", "beta", "gamma"):
        r.add_argument(f"--{name}", type=float)
    r.add_argument("--resolution", type=int, default=1024)
    r.add_argument("--out", default="-")
    r.add_argument("--svg")
    r.set_defaults(func=cmd_region)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=["composition", "dys", "tightness", "rates"])
    for name in ("theta1", "theta2", "beta", "gamma"):
        v.add_argument(f"--{name}", type=float)
    v.add_argument("--n", type=int, default=1_000_000)
    v.add_argument("--eps", type=float, default=0.02)
    v.add_argument("--probe", type=int, default=64)
    v.add_argument("--resolution", type=int, default=1024)
    v.add_argument("--delta", type=float, nargs="+", default=[0.05, 0.01])
    v.add_argument("--instances", type=int, default=100)
    v.add_argument("--K", type=int, default=1000)
    v.add_argument("--out", default="-")
    v.set_defaults(func=cmd_verify)

    it = sub.add_parser("iterate", parents=[common], help="fixed-point iteration trace as CSV")
    it.add_argument("--operator", choices=["identity", "composition", "dys"], required=True)
    for name in ("theta1", "theta2", "beta", "gamma"):
        it.add_argument(f"--{name}", type=float)
    it.add_argument("--theta", type=float, default=0.5)
    it.add_argument("--angle1", type=float, default=1.0)
    it.add_argument("--angle2", type=float, default=2.0)
    it.add_argument("--modulus1", type=float, default=1.0)
    it.add_argument("--modulus2", type=float, default=1.0)
    for name in ("a", "b", "c"):
        it.add_argument(f"--{name}", type=float, nargs=2, default=[0.0, 0.0], metavar=("RE", "IM"))
    it.add_argument("--x0", type=float, nargs=2, default=[1.0, 0.0])
    it.add_argument("--K", type=int, default=1000)
    it.add_argument("--fp-tol", type=float, default=1e-10)
    it.add_argument("--out", default="-")
    it.set_defaults(func=cmd_iterate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
