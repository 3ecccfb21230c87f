"""Command-line front end.

    specinv trajectory    --shape oscbarrier:a=1,b=1,c=1 --out traj.csv
    specinv invert        --shape power:p=1 --x-count 100
    specinv wavefunctions --shape oscbarrier:a=1,b=1,c=1 --v-list 3e-4,0.1,1,10
    specinv verify        --shape oscbarrier:a=1,b=1,c=1

Exit codes: 0 success, 1 a verification check failed, 2 bad configuration,
3 solver or data-quality failure, 4 empty reconstruction window.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .checks import run_checks
from .eigensolver import SolverConfig
from .errors import DataQualityError, NumericalError, RangeError
from .figures import long_format, wavefunction_family
from .inversion import coverage_window, reconstruct_upper
from .output import csv_text, json_text, write_text
from .potential import parse_shape, validate_transform
from .trajectory import default_coupling_grid, sample_trajectory, to_kinetic_potential

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_SOLVER, EXIT_WINDOW = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    shape_spec: str
    v_min: float = 3e-4
    v_max: float = 10.0
    v_count: int = 64
    half_width: float = None
    n_points: int = 4001
    auto_domain: bool = True
    out: str = None
    fmt: str = "csv"
    workers: int = 1

    def validate(self, need_trajectory=True):
        if not self.v_min > 0:
            raise ConfigError(f"--v-min must be > 0 (the coupling v must be positive), got {self.v_min!r}")
        if not self.v_max > self.v_min:
            raise ConfigError(f"--v-max must exceed --v-min, got {self.v_min!r} and {self.v_max!r}")
        if need_trajectory and self.v_count < 2:
            raise ConfigError(f"--v-count must be >= 2, got {self.v_count!r}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"--format must be csv or json, got {self.fmt!r}")
        try:
            self.solver()
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def solver(self):
        return SolverConfig(half_width=self.half_width, n_points=self.n_points, auto_domain=self.auto_domain)

    def v_grid(self):
        return default_coupling_grid(self.v_min, self.v_max, self.v_count)

    def metadata(self, **extra):
        meta = {
            "tool": "specinv",
            "version": __version__,
            "shape": self.shape_spec,
            "v_min": self.v_min,
            "v_max": self.v_max,
            "v_count": self.v_count,
            "half_width": self.half_width,
            "n_points": self.n_points,
            "auto_domain": self.auto_domain,
        }
        meta.update(extra)
        return meta


def _shape(cfg):
    try:
        shape = parse_shape(cfg.shape_spec)
    except (ValueError, OSError) as exc:
        raise ConfigError(f"invalid --shape: {exc}") from None
    report = validate_transform(shape.transform)
    if not report.accepted:
        raise ConfigError(f"shape rejected: g must be increasing and convex ({report.describe()})")
    return shape


def _emit(cfg, columns, **meta):
    text = csv_text(columns) if cfg.fmt == "csv" else json_text(columns, cfg.metadata(**meta))
    write_text(text, cfg.out)


def cmd_trajectory(cfg):
    cfg.validate()
    shape = _shape(cfg)
    traj = sample_trajectory(shape, cfg.v_grid(), cfg.solver(), cfg.workers)
    _emit(cfg, traj.columns(), command="trajectory")
    return EXIT_OK


def cmd_invert(cfg, x_min=None, x_max=None, x_count=200):
    cfg.validate()
    if x_count < 1:
        raise ConfigError("--x-count must be >= 1")
    shape = _shape(cfg)
    traj = sample_trajectory(shape, cfg.v_grid(), cfg.solver(), cfg.workers)
    curve = to_kinetic_potential(traj)
    lo, hi = coverage_window(curve)
    a = lo if x_min is None else x_min
    b = hi if x_max is None else x_max
    if not 0 < a <= b:
        raise ConfigError(f"x range must satisfy 0 < x-min <= x-max, got {a!r}, {b!r}")
    x = np.linspace(a, b, x_count) if x_count > 1 else np.array([a])
    print(f"coverage window: x in [{lo:.17g}, {hi:.17g}]", file=sys.stderr)
    print(f"interpolation self-error (half-density estimate): {curve.self_error():.3e}", file=sys.stderr)
    recon = reconstruct_upper(curve, x, shape)
    if recon.omitted.size:
        print(f"omitted {recon.omitted.size} x values outside the coverage window", file=sys.stderr)
    _emit(cfg, recon.columns(), command="invert", window=[lo, hi])
    return EXIT_OK


def cmd_wavefunctions(cfg, v_list=(3e-4, 0.1, 1.0, 10.0), normalization=20.0):
    cfg.validate(need_trajectory=False)
    if not normalization > 0:
        raise ConfigError(f"--normalization must be > 0, got {normalization!r}")
    v_list = [float(v) for v in v_list]
    if any(not v > 0 for v in v_list):
        raise ConfigError("every --v-list entry must be > 0 (the coupling v must be positive)")
    if any(b <= a for a, b in zip(v_list, v_list[1:])):
        raise ConfigError("--v-list must be strictly increasing")
    shape = _shape(cfg)
    family = wavefunction_family(shape, v_list, cfg.solver(), normalization, cfg.workers)
    _emit(cfg, long_format(family), command="wavefunctions", v_list=v_list, normalization=normalization)
    return EXIT_OK


def cmd_verify(cfg):
    cfg.validate()
    shape = _shape(cfg)
    results = run_checks(shape, cfg.v_grid(), cfg.solver(), workers=cfg.workers)
    for r in results:
        print(r.line())
    if cfg.out is not None:
        cols = {
            "check": [r.name for r in results],
            "passed": [int(r.passed) for r in results],
            "margin": [float(r.margin) for r in results],
        }
        if cfg.fmt == "csv":
            write_text(csv_text(cols), cfg.out)
        else:
            payload = {"metadata": cfg.metadata(command="verify"),
                       "checks": [{"name": r.name, "passed": bool(r.passed), "margin": float(r.margin),
                                   "detail": r.detail}
                                  for r in results]}
            write_text(json.dumps(payload, indent=1) + "\n", cfg.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def _float_list(text):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", required=True,
                        help="power:p=<p> | oscbarrier:a=<a>,b=<b>,c=<c> | tabulated:file=<csv>")
    common.add_argument("--v-min", type=float, default=3e-4)
    common.add_argument("--v-max", type=float, default=10.0)
    common.add_argument("--v-count", type=int, default=64)
    common.add_argument("--half-width", type=float, default=None,
                        help="fixed half-width L of [-L, L]; default chooses L per coupling")
    common.add_argument("--grid-points", type=int, default=4001)
    common.add_argument("--no-auto-domain", action="store_true",
                        help="do not grow L when the wavefunction reaches the boundary")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="specinv", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("trajectory", parents=[common], help="energy trajectory v,E,dEdv,s")
    p = sub.add_parser("invert", parents=[common], help="upper reconstruction x,A,f_exact")
    p.add_argument("--x-min", type=float, default=None)
    p.add_argument("--x-max", type=float, default=None)
    p.add_argument("--x-count", type=int, default=200)
    p = sub.add_parser("wavefunctions", parents=[common], help="wavefunction family v,x,psi")
    p.add_argument("--v-list", type=_float_list, default=[3e-4, 0.1, 1.0, 10.0])
    p.add_argument("--normalization", type=float, default=20.0)
    sub.add_parser("verify", parents=[common], help="run every inequality check")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        shape_spec=args.shape,
        v_min=args.v_min,
        v_max=args.v_max,
        v_count=args.v_count,
        half_width=args.half_width,
        n_points=args.grid_points,
        auto_domain=not args.no_auto_domain,
        out=args.out,
        fmt=args.format,
        workers=args.workers,
    )
    try:
        if args.command == "trajectory":
            return cmd_trajectory(cfg)
        if args.command == "invert":
            return cmd_invert(cfg, args.x_min, args.x_max, args.x_count)
        if args.command == "wavefunctions":
            return cmd_wavefunctions(cfg, args.v_list, args.normalization)
        return cmd_verify(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except (NumericalError, DataQualityError) as exc:
        detail = getattr(exc, "diagnostics", None) or getattr(exc, "indices", None)
        print(f"solver error: {exc}" + (f" [{detail}]" if detail else ""), file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
