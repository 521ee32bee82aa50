"""Command-line interface.

Subcommands: validate, curvature, fig1, fig2, petz-scan, geodesic.
Exit codes: 0 success / valid-faithful, 2 valid-but-nonfaithful,
3 invalid state, 4 parse error, 5 boundary degeneracy, 6 no convergence.
Data goes to stdout (or --out); diagnostics go to stderr.

Matrix files are JSON: {"modes": N, "ordering": "block"|"interleaved",
"entries": row-major list of 2N*2N doubles}.  Interleaved input is
permuted to the internal block ordering on load.
"""

import argparse
import csv
import json
import sys

import numpy as np

from . import chain, closed, delta, direct, gaussian, geodesics
from .errors import (
    BoundaryDegeneracyError,
    GaussGeomError,
    NoConvergenceError,
)

EXIT_OK = 0
EXIT_NONFAITHFUL = 2
EXIT_INVALID = 3
EXIT_PARSE = 4
EXIT_BOUNDARY = 5
EXIT_NO_CONVERGENCE = 6


class ParseFailure(Exception):
    pass


def _load_matrix(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseFailure(f"cannot read matrix file {path}: {exc}")
    if not isinstance(doc, dict):
        raise ParseFailure(f"{path}: expected a JSON object")
    try:
        n = int(doc["modes"])
        entries = [float(x) for x in doc["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseFailure(f"{path}: bad matrix document: {exc}")
    ordering = doc.get("ordering", "block")
    if ordering not in ("block", "interleaved"):
        raise ParseFailure(f"{path}: unknown ordering {ordering!r}")
    if n < 1 or len(entries) != 4 * n * n:
        raise ParseFailure(
            f"{path}: expected {4 * n * n} entries for {n} modes, "
            f"got {len(entries)}")
    V = np.array(entries).reshape(2 * n, 2 * n)
    if ordering == "interleaved":
        P = gaussian.interleaved_to_block_permutation(n)
        V = P @ V @ P.T
    return V


def _parse_nu(text):
    try:
        nu = np.array([float(x) for x in text.split(",") if x.strip()])
    except ValueError as exc:
        raise ParseFailure(f"bad --nu list {text!r}: {exc}")
    if nu.size == 0:
        raise ParseFailure("empty --nu list")
    return nu


def _out_stream(args):
    if getattr(args, "out", None):
        return open(args.out, "w", newline="")
    return sys.stdout


def _write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(x)) if isinstance(x, (float, np.floating))
                         else x for x in row])


def _emit(args, text):
    stream = _out_stream(args)
    stream.write(text)
    if not text.endswith("\n"):
        stream.write("\n")
    if stream is not sys.stdout:
        stream.close()


def cmd_validate(args):
    V = _load_matrix(args.matrix)
    try:
        report = gaussian.validate(V)
    except GaussGeomError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(args, json.dumps(report.to_dict(), indent=2))
    if not report.valid:
        return EXIT_INVALID
    return EXIT_OK if report.faithful else EXIT_NONFAITHFUL


def cmd_curvature(args):
    if args.nu is not None:
        nu = _parse_nu(args.nu)
        V = None
    else:
        V = _load_matrix(args.matrix)
        nu = gaussian.symplectic_eigenvalues(V)
    n = nu.size
    report = {
        "modes": n,
        "nu": list(nu),
        "entropy_nats": gaussian.entropy_from_spectrum(np.clip(nu, 0.5, None)),
    }
    if args.method in ("closed", "both"):
        report["scal_closed"] = closed.scalar_curvature(nu)
        report["ratio"] = closed.curvature_ratio(nu)
    if args.method in ("direct", "both"):
        if V is None:
            V = np.diag(np.concatenate([nu, nu]))
        report["scal_direct"] = direct.scalar_curvature_direct(V)
        if "ratio" not in report:
            report["ratio"] = report["scal_direct"] / (n * (2 * n - 1) * (n + 1))
    if args.method == "both":
        c, d = report["scal_closed"], report["scal_direct"]
        report["relative_difference"] = abs(c - d) / max(abs(c), 1e-300)
    if args.format == "csv":
        keys = [k for k in ("modes", "scal_closed", "scal_direct",
                            "relative_difference", "ratio", "entropy_nats")
                if k in report]
        stream = _out_stream(args)
        _write_csv(stream, keys, [[report[k] for k in keys]])
        if stream is not sys.stdout:
            stream.close()
    else:
        _emit(args, json.dumps(report, indent=2))
    return EXIT_OK


def cmd_fig1(args):
    grid = np.linspace(args.nu_min, args.nu_max, args.points)
    rows = []
    for nu1 in grid:
        for nu2 in grid:
            nu = np.array([nu1, nu2])
            rows.append((nu1, nu2,
                         gaussian.entropy_from_spectrum(nu),
                         closed.scalar_curvature(nu)))
    stream = _out_stream(args)
    _write_csv(stream, ["nu1", "nu2", "entropy_nats", "scal"], rows)
    if stream is not sys.stdout:
        stream.close()
    return EXIT_OK


def cmd_fig2(args):
    if args.panel == "t":
        temps = np.logspace(np.log10(args.t_min), np.log10(args.t_max),
                            args.t_points)
        grid = [chain.ChainParams(args.modes, w, t)
                for w in args.omega for t in temps]
    else:
        grid = [chain.ChainParams(n, args.omega[0], args.t_tilde)
                for n in range(args.n_min, args.n_max + 1, args.n_step)]
    rows = chain.chain_curvature_scan(grid, coefficient=args.ham_coefficient)
    stream = _out_stream(args)
    _write_csv(stream, ["modes", "omega_tilde", "t_tilde", "scal", "ratio",
                        "entropy_nats"], rows)
    if stream is not sys.stdout:
        stream.close()
    return EXIT_OK


def cmd_petz_scan(args):
    n = args.modes
    if args.grid is not None:
        try:
            lo, hi, count = args.grid.split(":")
            lo, hi, count = float(lo), float(hi), int(count)
        except ValueError as exc:
            raise ParseFailure(f"bad --grid spec {args.grid!r}: {exc}")
        axis = np.linspace(lo, hi, count)
        if n == 1:
            spectra = axis[:, None]
        elif n == 2:
            spectra = np.array([[a, b] for a in axis for b in axis])
        else:
            raise ParseFailure("--grid scans support N <= 2; use --samples")
    else:
        rng = np.random.default_rng(args.seed)
        spectra = np.sort(rng.uniform(0.6, 5.0, size=(args.samples, n)), axis=1)
    spectra = np.sort(spectra, axis=1)
    scal = np.array([closed.scalar_curvature(s) for s in spectra])
    ent = np.array([gaussian.entropy_from_spectrum(s) for s in spectra])
    ds = scal[:, None] - scal[None, :]
    de = ent[:, None] - ent[None, :]
    # Only pairs where one spectrum dominates the other mode by mode are
    # ordered by mixedness; for such pairs more mixing must raise both
    # the entropy and the curvature.  Incomparable pairs carry no
    # prediction (curvature is not a function of entropy alone) and are
    # counted separately.
    le = np.all(spectra[:, None, :] <= spectra[None, :, :], axis=2)
    comparable = le | le.T
    tol = args.tolerance
    violating = comparable & (ds * de < 0.0) \
        & (np.abs(ds) > tol) & (np.abs(de) > tol)
    iu = np.triu_indices(len(spectra), 1)
    bad = violating[iu]
    pairs = int(bad.size)
    n_comparable = int(np.count_nonzero(comparable[iu]))
    n_bad = int(np.count_nonzero(bad))
    report = {
        "modes": n,
        "states": len(spectra),
        "pairs": pairs,
        "comparable_pairs": n_comparable,
        "violations": n_bad,
        "violating_spectra": [],
    }
    if n_bad:
        idx = np.nonzero(bad)[0][:20]
        report["violating_spectra"] = [
            [list(spectra[iu[0][i]]), list(spectra[iu[1][i]])] for i in idx]
    _emit(args, json.dumps(report, indent=2))
    # report-only policy: violations are listed, not fatal, but flagged
    # with a generic nonzero status so scripts can notice
    return EXIT_OK if n_bad == 0 else 1


def cmd_geodesic(args):
    V0 = _load_matrix(args.v0)
    residual = None
    if args.v1 is not None:
        V1 = _load_matrix(args.v1)
        result = geodesics.geodesic_distance_estimate(V0, V1, steps=args.steps)
        path, length, residual = result.path, result.length, result.residual
    elif args.a0 is not None:
        A0 = _load_matrix(args.a0)
        path = geodesics.geodesic_shoot(V0, A0, steps=args.steps)
        length = geodesics.path_length(path)
    else:
        raise ParseFailure("geodesic requires either --v1 or --a0")
    d = 2 * path.modes
    header = (["t"] + [f"v{i}{j}" for i in range(d) for j in range(d)]
              + [f"vdot{i}{j}" for i in range(d) for j in range(d)])
    rows = [[t, *V.ravel(), *W.ravel()]
            for t, V, W in zip(path.times, path.points, path.velocities)]
    stream = _out_stream(args)
    _write_csv(stream, header, rows)
    if stream is not sys.stdout:
        stream.close()
        summary = {"length": length}
        if residual is not None:
            summary["residual"] = residual
        print(json.dumps(summary, indent=2))
    else:
        print(f"length = {length!r}"
              + (f", residual = {residual!r}" if residual is not None else ""),
              file=sys.stderr)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="gaussgeom",
        description="KMB information geometry of faithful Gaussian states")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a covariance matrix file")
    v.add_argument("matrix")
    v.add_argument("--out")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("curvature", help="scalar curvature of a state")
    c.add_argument("matrix", nargs="?")
    c.add_argument("--nu", help="comma-separated symplectic spectrum")
    c.add_argument("--method", choices=["closed", "direct", "both"],
                   default="closed")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_curvature)

    f1 = sub.add_parser("fig1", help="two-mode curvature surface dataset")
    f1.add_argument("--nu-min", type=float, default=0.6)
    f1.add_argument("--nu-max", type=float, default=5.0)
    f1.add_argument("--points", type=int, default=50)
    f1.add_argument("--out")
    f1.set_defaults(func=cmd_fig1)

    f2 = sub.add_parser("fig2", help="chain curvature scan datasets")
    f2.add_argument("--panel", choices=["t", "n"], default="t")
    f2.add_argument("--modes", type=int, default=50)
    f2.add_argument("--omega", type=float, nargs="+", default=[1.0])
    f2.add_argument("--t-min", type=float, default=0.2)
    f2.add_argument("--t-max", type=float, default=50.0)
    f2.add_argument("--t-points", type=int, default=25)
    f2.add_argument("--t-tilde", type=float, default=0.5)
    f2.add_argument("--n-min", type=int, default=10)
    f2.add_argument("--n-max", type=int, default=100)
    f2.add_argument("--n-step", type=int, default=10)
    f2.add_argument("--ham-coefficient",
                    choices=["mode-consistent", "as-printed"],
                    default="mode-consistent",
                    help="diagonal coefficient convention for "
                         "chain_hamiltonian consumers")
    f2.add_argument("--out")
    f2.set_defaults(func=cmd_fig2)

    ps = sub.add_parser("petz-scan",
                        help="entropy/curvature ordering agreement scan")
    ps.add_argument("--modes", type=int, default=2)
    ps.add_argument("--grid", help="lo:hi:count spectrum grid (N <= 2)")
    ps.add_argument("--samples", type=int, default=200)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--tolerance", type=float, default=1e-10)
    ps.add_argument("--out")
    ps.set_defaults(func=cmd_petz_scan)

    g = sub.add_parser("geodesic", help="integrate or solve a geodesic")
    g.add_argument("--v0", required=True)
    g.add_argument("--v1")
    g.add_argument("--a0")
    g.add_argument("--steps", type=int, default=64)
    g.add_argument("--out")
    g.set_defaults(func=cmd_geodesic)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoConvergenceError as exc:
        print(f"no convergence: {exc} (residual {exc.residual:g})",
              file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except BoundaryDegeneracyError as exc:
        print(f"boundary degeneracy: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except GaussGeomError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
