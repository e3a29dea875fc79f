"""Timing sweeps over sigma_s and sigma_r for both convolution backends."""

import argparse
import io
import sys

from fourier_bilateral.cli import bench, build_parser
from fourier_bilateral.pgm import read_pgm
from fourier_bilateral.synthetic import textured_image

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--image", help="PGM (default: synthetic 512x512)")
    ap.add_argument("--repeats", type=int, default=3)
    opts = ap.parse_args()
    img = read_pgm(opts.image) if opts.image else textured_image()
    for backend in ("recursive", "truncated"):
        args = build_parser().parse_args(
            ["--input", "-", "--backend", backend, "--repeats", str(opts.repeats)])
        buf = io.StringIO()
        bench(img, args, out=buf)
        rows = buf.getvalue().strip().splitlines()
        s_times = [float(r.split(",")[2]) for r in rows if r.startswith("sigma_s")]
        sys.stdout.write(f"# backend={backend} sigma_s max/min={max(s_times) / min(s_times):.2f}\n")
        sys.stdout.write(buf.getvalue())
