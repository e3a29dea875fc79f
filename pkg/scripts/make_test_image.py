"""Write the synthetic 512x512 test image (local dynamic range 217) as PGM."""

import argparse

from fourier_bilateral.pgm import write_pgm
from fourier_bilateral.synthetic import textured_image

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("output")
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--peak", type=int, default=217)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    write_pgm(textured_image(args.size, args.peak, args.seed), args.output)
