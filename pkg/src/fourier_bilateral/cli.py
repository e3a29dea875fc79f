"""Command-line front end.

    fourier-bilateral --input in.pgm --output out.pgm --sigma-s 3 --sigma-r 30
    fourier-bilateral --input in.pgm --bench --backend recursive
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import kernels
from .bilateral import FilterConfig, filter_image
from .errors import ConfigurationError, NumericalAnomalyError, NumericalBreakdownError, PgmParseError
from .pgm import read_pgm, write_pgm
from .spatial import BACKENDS, make_spatial

SIGMA_S_SWEEP = (1, 2, 5, 8, 10, 12)
SIGMA_R_SWEEP = (10, 15, 20, 30, 50, 100)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fourier-bilateral",
        description="Fast bilateral filter with a certified Fourier range-kernel approximation.",
    )
    p.add_argument("--input", required=True, help="input PGM (P2 or P5, 8-bit)")
    p.add_argument("--output", help="output PGM (P5)")
    p.add_argument("--sigma-s", type=float, default=3.0, help="spatial Gaussian width in pixels")
    p.add_argument("--sigma-r", type=float, default=30.0, help="range kernel width in intensity units")
    p.add_argument("--epsilon", type=float, default=1e-3, help="kernel fit tolerance")
    p.add_argument("--kernel", default="gaussian",
                   help="gaussian | exponential | tabulated:<path>")
    p.add_argument("--spatial", choices=("gaussian", "box"), default="gaussian")
    p.add_argument("--radius", type=int, help="box radius (default ceil(3*sigma_s))")
    p.add_argument("--backend", choices=BACKENDS, default="truncated",
                   help="convolution backend; 'recursive' is O(1) in sigma_s")
    p.add_argument("--compare-exact", action="store_true",
                   help="also run the direct filter and report the measured error")
    p.add_argument("--report", help="write the accuracy report (key=value lines) here")
    p.add_argument("--bench", action="store_true",
                   help="time the fast filter over the sigma_s and sigma_r sweeps, CSV to stdout")
    p.add_argument("--repeats", type=int, default=3, help="bench: best of this many runs")
    return p


def parse_kernel(spec: str, sigma_r: float) -> kernels.RangeKernel:
    if spec == "gaussian":
        return kernels.gaussian(sigma_r)
    if spec == "exponential":
        return kernels.exponential(sigma_r)
    if spec.startswith("tabulated:"):
        return kernels.load_table(spec.split(":", 1)[1])
    raise ConfigurationError(f"unknown --kernel {spec!r}")


def make_config(args, sigma_s=None, sigma_r=None) -> FilterConfig:
    sigma_s = args.sigma_s if sigma_s is None else sigma_s
    sigma_r = args.sigma_r if sigma_r is None else sigma_r
    if args.spatial == "gaussian":
        spatial = make_spatial("gaussian", sigma_s=sigma_s)
    else:
        radius = args.radius if args.radius is not None else int(math.ceil(3 * sigma_s))
        spatial = make_spatial("box", radius=radius)
    return FilterConfig(
        spatial=spatial,
        range=parse_kernel(args.kernel, sigma_r),
        epsilon=args.epsilon,
        backend=args.backend,
    )


def _time_filter(image, config, repeats) -> float:
    best = math.inf
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        filter_image(image, config)
        best = min(best, time.perf_counter() - t0)
    return best * 1e3


def bench(image, args, out=sys.stdout):
    """Write ``param,value,millis`` rows for both sweeps."""
    out.write("param,value,millis\n")
    for s in SIGMA_S_SWEEP:
        ms = _time_filter(image, make_config(args, sigma_s=s), args.repeats)
        out.write(f"sigma_s,{s},{ms:.3f}\n")
    for r in SIGMA_R_SWEEP:
        ms = _time_filter(image, make_config(args, sigma_r=r), args.repeats)
        out.write(f"sigma_r,{r},{ms:.3f}\n")
    out.flush()


def run(args) -> int:
    try:
        image = read_pgm(args.input)
    except (OSError, PgmParseError) as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 1
    try:
        if args.bench:
            bench(image, args)
            if not args.output and not args.report:
                return 0
        if not args.output and not args.report:
            print("error: nothing to do; pass --output, --report or --bench", file=sys.stderr)
            return 2
        config = make_config(args)
        filtered, report = filter_image(image, config, compare_exact=args.compare_exact)
    except (ConfigurationError, NumericalBreakdownError, NumericalAnomalyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.output:
            write_pgm(filtered, args.output)
        if args.report:
            with open(args.report, "w") as fh:
                fh.write(report.to_text())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
