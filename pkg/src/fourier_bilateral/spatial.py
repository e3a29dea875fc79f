"""Normalized separable spatial kernels and mirror-padded 2-D convolution."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter, lfilter_zi

from .errors import ConfigurationError

PADDING_MODES = ("mirror",)
BACKENDS = ("truncated", "recursive")


@dataclass(frozen=True, eq=False)
class SpatialKernel:
    """Separable kernel on the window ``[-W, W]^2``.

    ``profile`` is the normalized 1-D profile; the 2-D weights are its outer
    product and sum to one.
    """

    kind: str
    radius: int
    profile: np.ndarray
    sigma_s: float | None = None

    @property
    def weights(self) -> np.ndarray:
        return np.outer(self.profile, self.profile)

    @property
    def w0(self) -> float:
        c = self.profile[self.radius]
        return float(c * c)


def make_spatial(kind: str, sigma_s: float | None = None, radius: int | None = None) -> SpatialKernel:
    """Gaussian kernels use ``W = ceil(3 sigma_s)``; box kernels take ``radius``."""
    if kind == "gaussian":
        if sigma_s is None or not sigma_s > 0 or not math.isfinite(sigma_s):
            raise ConfigurationError(f"gaussian spatial kernel needs sigma_s > 0, got {sigma_s!r}")
        W = int(math.ceil(3.0 * sigma_s))
        k = np.arange(-W, W + 1, dtype=float)
        g = np.exp(-(k**2) / (2.0 * sigma_s**2))
        return SpatialKernel("gaussian", W, g / g.sum(), float(sigma_s))
    if kind == "box":
        if radius is None or int(radius) != radius or radius < 1:
            raise ConfigurationError(f"box kernel needs an integer radius >= 1, got {radius!r}")
        W = int(radius)
        return SpatialKernel("box", W, np.full(2 * W + 1, 1.0 / (2 * W + 1)))
    raise ConfigurationError(f"unknown spatial kernel kind {kind!r}")


def mirror_pad(a: np.ndarray, width: int, axis: int) -> np.ndarray:
    # half-sample symmetric extension: ... c b a | a b c ... (repeats for short axes)
    pad = [(0, 0)] * a.ndim
    pad[axis] = (width, width)
    return np.pad(a, pad, mode="symmetric")


def _correlate_axis(a: np.ndarray, profile: np.ndarray, axis: int) -> np.ndarray:
    W = (profile.size - 1) // 2
    padded = np.moveaxis(mirror_pad(a, W, axis), axis, 0)
    n = a.shape[axis]
    out = np.zeros((n,) + padded.shape[1:])
    # fixed tap order keeps results bit-reproducible
    for k, wk in enumerate(profile):
        out += wk * padded[k : k + n]
    return np.moveaxis(out, 0, axis)


def convolve(plane: np.ndarray, kernel: SpatialKernel, padding: str = "mirror",
             backend: str = "truncated") -> np.ndarray:
    """Separable 2-D convolution with mirror boundary extension.

    ``backend="recursive"`` replaces each 1-D Gaussian pass by a third-order
    recursive filter whose cost does not depend on ``sigma_s``. It only
    approximates the truncated kernel and is meant for timing, not for
    accuracy comparisons.
    """
    if padding not in PADDING_MODES:
        raise ConfigurationError(f"unsupported padding {padding!r}")
    plane = np.asarray(plane, dtype=float)
    if plane.ndim != 2 or plane.size == 0:
        raise ValueError(f"expected a non-empty 2-D plane, got shape {plane.shape}")
    if backend == "truncated":
        # symmetric profile, so correlation == convolution
        return _correlate_axis(_correlate_axis(plane, kernel.profile, 0), kernel.profile, 1)
    if backend == "recursive":
        if kernel.kind == "box":
            return _box_axis(_box_axis(plane, kernel.radius, 0), kernel.radius, 1)
        return recursive_gaussian(plane, kernel.sigma_s, pad=kernel.radius)
    raise ConfigurationError(f"unknown convolution backend {backend!r}")


def _box_axis(a: np.ndarray, W: int, axis: int) -> np.ndarray:
    # running sum via cumulative sums: O(1) per sample for any radius
    padded = np.moveaxis(mirror_pad(a, W, axis), axis, 0)
    c = np.concatenate([np.zeros((1,) + padded.shape[1:]), np.cumsum(padded, axis=0)])
    n = a.shape[axis]
    out = (c[2 * W + 1 : 2 * W + 1 + n] - c[:n]) / (2 * W + 1)
    return np.moveaxis(out, 0, axis)


def young_van_vliet_coeffs(sigma: float):
    """Feedback coefficients of the Young/van Vliet recursive Gaussian."""
    if sigma >= 2.5:
        q = 0.98711 * sigma - 0.96330
    elif sigma >= 0.5:
        q = 3.97156 - 4.14554 * math.sqrt(1.0 - 0.26891 * sigma)
    else:
        raise ConfigurationError("recursive gaussian needs sigma >= 0.5")
    b0 = 1.57825 + 2.44413 * q + 1.4281 * q**2 + 0.422205 * q**3
    b1 = 2.44413 * q + 2.85619 * q**2 + 1.26661 * q**3
    b2 = -(1.4281 * q**2 + 1.26661 * q**3)
    b3 = 0.422205 * q**3
    B = 1.0 - (b1 + b2 + b3) / b0
    return np.array([B]), np.array([1.0, -b1 / b0, -b2 / b0, -b3 / b0])


def _iir_pass(x: np.ndarray, num, den, axis: int) -> np.ndarray:
    first = np.take(x, [0], axis=axis)
    shape = [1] * x.ndim
    shape[axis] = den.size - 1
    zi = lfilter_zi(num, den).reshape(shape) * first
    y, _ = lfilter(num, den, x, axis=axis, zi=zi)
    return y


def recursive_gaussian(plane: np.ndarray, sigma: float, pad: int = 0) -> np.ndarray:
    num, den = young_van_vliet_coeffs(sigma)
    out = np.asarray(plane, dtype=float)
    for axis in (0, 1):
        x = mirror_pad(out, pad, axis) if pad else out
        y = _iir_pass(x, num, den, axis)
        y = np.flip(_iir_pass(np.flip(y, axis), num, den, axis), axis)
        if pad:
            y = np.take(y, np.arange(pad, pad + out.shape[axis]), axis=axis)
        out = y
    return out
