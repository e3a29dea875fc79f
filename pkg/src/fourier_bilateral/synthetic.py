"""Deterministic synthetic test images."""

from __future__ import annotations

import numpy as np
from scipy.ndimage import gaussian_filter


def textured_image(size: int = 512, peak: int = 217, seed: int = 0) -> np.ndarray:
    """Integer image in ``[0, peak]`` with smooth shading, stripes and hard edges.

    A one-pixel step from 0 to ``peak`` sits in the middle, so the local
    dynamic range equals ``peak`` for every window radius >= 1.
    """
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size].astype(float)
    shading = gaussian_filter(rng.standard_normal((size, size)), size / 16, mode="reflect")
    shading = (shading - shading.min()) / np.ptp(shading)
    stripes = 0.5 + 0.5 * np.sin(2 * np.pi * (x * np.cos(0.6) + y * np.sin(0.6)) / 7.0)
    img = 0.55 * shading + 0.3 * stripes + 0.05 * rng.random((size, size))
    img[size // 4 : size // 2, size // 4 : 3 * size // 4] *= 0.4
    img = np.round(peak * img / img.max())
    c = size // 2
    img[c - 8 : c + 8, c - 8 : c] = 0
    img[c - 8 : c + 8, c : c + 8] = peak
    return np.clip(img, 0, peak)


def random_image(shape=(64, 64), high: int = 255, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, high + 1, size=shape).astype(float)
