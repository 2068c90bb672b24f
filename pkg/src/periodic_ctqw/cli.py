"""Command-line surface: simulations, spectral tables, and validation.

Subcommands emit figure-ready CSV or JSON; `validate` runs the invariant
suite and reports machine-readable pass/fail results. Exit codes: 0 success,
1 validation failure, 2 configuration error, 3 computation error.
"""

from __future__ import annotations

import os

# CTQW_THREADS caps numerical parallelism; must be applied before numpy
# initializes its BLAS thread pool.
_threads = os.environ.get("CTQW_THREADS")
if _threads and _threads.isdigit():
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import argparse
import json
import math
import sys
import tempfile
import warnings
from pathlib import Path

import numpy as np

from . import amplitudes, lattice, limitlaw, spectral
from .errors import CtqwError
from .params import NEAR_DEGENERATE_GAP, Regime, WalkParams

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_COMPUTATION = 3

FLOAT_FMT = "%.17g"


class ConfigError(Exception):
    pass


def _fmt(v) -> str:
    return FLOAT_FMT % float(v)


def _atomic_write(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."),
                               prefix=target.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render(header: list[str], rows: list[list[float]], fmt: str,
            metadata: dict) -> str:
    if fmt == "json":
        doc = {"metadata": metadata,
               "columns": header,
               "rows": [[float(v) for v in row] for row in rows]}
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# {key}={value}" for key, value in metadata.items()]
    lines.append(",".join(header))
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _params_from(args) -> WalkParams:
    try:
        params = WalkParams(args.gamma0, args.gamma1)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if params.near_degenerate:
        print(f"warning: ||gamma0|-|gamma1|| < {NEAR_DEGENERATE_GAP}; "
              "quadrature near the regime boundary is stiff", file=sys.stderr)
    return params


def _resolve_radius(params: WalkParams, t: float, radius_arg: str) -> tuple[int, bool]:
    rule = params.light_cone_radius(t)
    if radius_arg == "auto":
        return rule, False
    try:
        radius = int(radius_arg)
    except ValueError as exc:
        raise ConfigError(f"--radius must be an integer or 'auto'") from exc
    if radius < 1:
        raise ConfigError("--radius must be positive")
    return radius, radius < rule


def _base_metadata(args, params: WalkParams, truncated: bool | None = None) -> dict:
    md = {"gamma0": _fmt(params.gamma0), "gamma1": _fmt(params.gamma1)}
    if hasattr(args, "time"):
        md["time"] = _fmt(args.time)
    if truncated is not None:
        md["truncated"] = "true" if truncated else "false"
    return md


def cmd_evolve(args) -> int:
    params = _params_from(args)
    radius, truncated = _resolve_radius(params, args.time, args.radius)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        field = amplitudes.amplitude_field(params, args.time, radius,
                                           method=args.method)
    rows = [[int(x), v.real, v.imag]
            for x, v in zip(field.positions, field.values)]
    md = _base_metadata(args, params, truncated)
    md["method"] = args.method
    _atomic_write(args.output, _render(["x", "re", "im"], rows, args.format, md))
    return EXIT_OK


def cmd_distribution(args) -> int:
    params = _params_from(args)
    radius, truncated = _resolve_radius(params, args.time, args.radius)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dist = amplitudes.distribution(params, args.time, radius,
                                       method=args.method)
    law = limitlaw.LimitLaw.from_params(params)
    if args.time > 0:
        approx = limitlaw.finite_t_approximation(law, dist.positions, args.time)
    else:
        approx = np.zeros_like(dist.probs)
    rows = [[int(x), p, a]
            for x, p, a in zip(dist.positions, dist.probs, approx)]
    md = _base_metadata(args, params, truncated)
    md["method"] = args.method
    _atomic_write(args.output,
                  _render(["x", "prob", "approx"], rows, args.format, md))
    return EXIT_OK


def cmd_limit(args) -> int:
    params = _params_from(args)
    law = limitlaw.LimitLaw.from_params(params)
    lo, hi = law.support
    xs = np.linspace(lo, hi, args.grid)
    rows = [[x, limitlaw.limit_density(law, x), limitlaw.limit_cdf(law, x)]
            for x in xs]
    _atomic_write(args.output,
                  _render(["x", "density", "cdf"], rows, args.format,
                          _base_metadata(args, params)))
    return EXIT_OK


def cmd_moments(args) -> int:
    params = _params_from(args)
    law = limitlaw.LimitLaw.from_params(params)
    rows = []
    for r in range(args.rmax + 1):
        closed = limitlaw.limit_moment(law, r)
        if params.regime is Regime.GENERIC:
            via_h = limitlaw.moment_limit_via_h(params, r)
        else:
            via_h = closed
        rows.append([r, closed, via_h])
    _atomic_write(args.output,
                  _render(["r", "closed_form", "via_h"], rows, args.format,
                          _base_metadata(args, params)))
    return EXIT_OK


def cmd_compare(args) -> int:
    params = _params_from(args)
    radius, truncated = _resolve_radius(params, args.time, args.radius)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dist = amplitudes.distribution(params, args.time, radius,
                                       method=args.method)
    law = limitlaw.LimitLaw.from_params(params)
    rows = [
        ["kolmogorov_distance", limitlaw.empirical_cdf_distance(dist, law)],
        ["first_moment_empirical", limitlaw.empirical_moment(dist, 1)],
        ["second_moment_empirical", limitlaw.empirical_moment(dist, 2)],
        ["second_moment_limit", limitlaw.limit_moment(law, 2)],
        ["captured_mass", dist.captured_mass],
    ]
    md = _base_metadata(args, params, truncated)
    md["method"] = args.method
    if args.format == "json":
        doc = {"metadata": md, "metrics": {k: float(v) for k, v in rows}}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"# {k}={v}" for k, v in md.items()]
        lines.append("metric,value")
        lines.extend(f"{k},{_fmt(v)}" for k, v in rows)
        text = "\n".join(lines) + "\n"
    _atomic_write(args.output, text)
    return EXIT_OK


def cmd_spectral(args) -> int:
    params = _params_from(args)
    if args.function == "h":
        ks = np.linspace(-math.pi, math.pi, args.grid, endpoint=False)
        profile = spectral.sample_profile(params, "h", ks)
        rows = [[k, v] for k, v in zip(profile.k_grid, profile.values)]
        header = ["k", "h"]
    else:  # kbranches
        lo, hi = spectral.velocity_interval(params)
        # open interval: the derivative table would blow up at the edges
        xs = np.linspace(lo, hi, args.grid)
        rows = []
        for x in xs:
            kp, km = spectral.k_branches(params, x)
            rows.append([x, kp, km])
        header = ["x", "k_plus", "k_minus"]
    _atomic_write(args.output,
                  _render(header, rows, args.format,
                          _base_metadata(args, params)))
    return EXIT_OK


def _validation_checks(params: WalkParams):
    """Yield (name, measured, tolerance, passed) for the invariant suite."""
    law = limitlaw.LimitLaw.from_params(params)
    checks = []

    def record(name, measured, tol):
        checks.append((name, float(measured), float(tol),
                       bool(measured <= tol)))

    # normalization across methods and times
    for t in (0.0, 1.0, 5.0, 20.0):
        dist = amplitudes.distribution(params, t)
        record(f"normalization_quadrature_t{t:g}",
               abs(dist.captured_mass - 1.0), 1e-8)
    field_q = amplitudes.amplitude_field(params, 10.0)
    field_l = lattice.evolve(params, 10.0, field_q.window_radius)
    record("quadrature_vs_lattice_t10",
           np.max(np.abs(field_q.values - field_l.values)), 1e-6)
    record("lattice_norm_t10", abs(field_l.total_mass - 1.0), 1e-10)

    # even symmetry and real/imaginary structure
    vals = field_q.values
    even_idx = (field_q.positions % 2 == 0)
    mirrored = vals[::-1]  # entry i holds the value at -x
    record("even_symmetry",
           np.max(np.abs(vals[even_idx] - mirrored[even_idx])), 1e-12)
    record("even_real_structure", np.max(np.abs(vals[even_idx].imag)), 1e-12)
    record("odd_imag_structure", np.max(np.abs(vals[~even_idx].real)), 1e-12)

    if params.regime is Regime.EQUAL_MAGNITUDE:
        field_b = amplitudes.amplitude_field(params, 10.0,
                                             field_q.window_radius,
                                             method="bessel")
        record("quadrature_vs_bessel_t10",
               np.max(np.abs(field_q.values - field_b.values)), 1e-8)
        from .bessel import bessel_j
        probs = np.abs(field_b.values) ** 2
        expect = np.array([bessel_j(abs(int(x)),
                                    2 * abs(params.gamma0) * 10.0) ** 2
                           for x in field_b.positions])
        record("bessel_probability_law", np.max(np.abs(probs - expect)), 1e-10)
    else:
        ks = np.linspace(-math.pi, math.pi, 200, endpoint=False)
        record("abs_I_squared_equals_g",
               np.max(np.abs(np.abs(spectral.I_fn(params, ks)) ** 2
                             - spectral.g(params, ks))), 1e-13)
        hk = spectral.h(params, ks)
        record("h_period_pi",
               np.max(np.abs(spectral.h(params, ks + math.pi) - hk)), 1e-13)
        record("h_antisymmetry",
               np.max(np.abs(spectral.h(params, math.pi - ks) + hk)), 1e-13)
        record("h_extremum_value",
               abs(spectral.h(params, spectral.k_star(params))
                   - spectral.h_at_k_star(params)), 1e-10)
        lo, hi = spectral.velocity_interval(params)
        xs = np.linspace(lo, hi, 102)[1:-1]
        rt = max(max(abs(spectral.h(params, k) - x)
                     for k in spectral.k_branches(params, x)) for x in xs)
        record("branch_round_trip", rt, 1e-9)
        collapse = max(
            abs(spectral.f_branch_derivative(params, x, "+")
                - spectral.f_branch_derivative(params, x, "-")
                - math.copysign(1.0, x) * params.product_sign
                / math.sqrt(4 * params.gamma_xi_abs ** 2 - x * x))
            for x in xs)
        record("branch_derivative_collapse", collapse, 1e-12)
        moment_err = max(
            abs(limitlaw.moment_limit_via_h(params, r)
                - limitlaw.limit_moment(law, r)) for r in range(9))
        record("moment_identity_r_le_8", moment_err, 1e-8)

    dist = amplitudes.distribution(params, 200.0)
    record("kolmogorov_distance_t200",
           limitlaw.empirical_cdf_distance(dist, law), 0.05)
    return checks


def cmd_validate(args) -> int:
    params = _params_from(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        checks = _validation_checks(params)
    report = [{"check": name, "status": "pass" if ok else "fail",
               "measured": measured, "tolerance": tol}
              for name, measured, tol, ok in checks]
    _atomic_write(args.output, json.dumps(report, indent=2) + "\n")
    if all(item["status"] == "pass" for item in report):
        return EXIT_OK
    return EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctqw",
        description="Continuous-time quantum walk with alternating couplings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, time=True, radius=True, method=True, grid=False):
        p.add_argument("--gamma0", type=float, required=True)
        p.add_argument("--gamma1", type=float, required=True)
        if time:
            p.add_argument("--time", type=float, default=0.0)
        if radius:
            p.add_argument("--radius", default="auto",
                           help="window radius or 'auto' (light-cone rule)")
        if method:
            p.add_argument("--method", default="quadrature",
                           choices=["quadrature", "bessel", "lattice"])
        if grid:
            p.add_argument("--grid", type=int, default=2001)
        p.add_argument("--format", default="csv", choices=["csv", "json"])
        p.add_argument("--output", default=None,
                       help="output path (default stdout)")

    p = sub.add_parser("evolve", help="amplitudes over the window")
    common(p)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("distribution",
                       help="probabilities and the large-t approximation")
    common(p)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("limit", help="limit density and CDF table")
    common(p, time=False, radius=False, method=False, grid=True)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("moments", help="limit moments, closed form vs h-integral")
    common(p, time=False, radius=False, method=False)
    p.add_argument("--rmax", type=int, default=8)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("compare",
                       help="distance between simulation and limit law")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("spectral", help="momentum-space function tables")
    common(p, time=False, radius=False, method=False, grid=True)
    p.add_argument("--function", default="h", choices=["h", "kbranches"])
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("validate", help="run the invariant suite")
    common(p, time=False, radius=False, method=False)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CtqwError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
