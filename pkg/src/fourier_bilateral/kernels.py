"""Range kernels: the weight placed on an intensity difference."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, InputDomainError

FAMILIES = ("gaussian", "exponential", "tabulated")


@dataclass(frozen=True)
class RangeKernel:
    """Symmetric range kernel with ``phi(0) == 1``.

    ``sigma_r`` is in intensity units and is required for the analytic
    families. Tabulated kernels hold samples at ``t = 0, 1, ..., len-1``.
    """

    family: str
    sigma_r: float | None = None
    table: tuple[float, ...] | None = None

    @property
    def nonnegative(self) -> bool:
        # analytic families are positive; the error bound needs phi >= 0
        return self.family != "tabulated" or min(self.table) >= 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigurationError(f"unknown kernel family {self.family!r}")
        if self.family == "tabulated":
            if not self.table:
                raise ConfigurationError("tabulated kernel needs a non-empty table")
            tab = np.asarray(self.table, dtype=float)
            if not np.all(np.isfinite(tab)):
                raise ConfigurationError("kernel table has non-finite entries")
            if tab[0] != 1.0:
                raise ConfigurationError(f"kernel table must start with 1.0, got {tab[0]!r}")
            if np.max(np.abs(tab)) > 1.0:
                raise ConfigurationError("kernel table values must not exceed 1 in magnitude")
            object.__setattr__(self, "table", tuple(float(v) for v in tab))
        else:
            if self.sigma_r is None or not self.sigma_r > 0 or not math.isfinite(self.sigma_r):
                raise ConfigurationError(f"{self.family} kernel needs sigma_r > 0")
            object.__setattr__(self, "sigma_r", float(self.sigma_r))


def gaussian(sigma_r: float) -> RangeKernel:
    return RangeKernel("gaussian", sigma_r=sigma_r)


def exponential(sigma_r: float) -> RangeKernel:
    return RangeKernel("exponential", sigma_r=sigma_r)


def tabulated(table: Sequence[float]) -> RangeKernel:
    return RangeKernel("tabulated", table=tuple(table))


def load_table(path: str | Path) -> RangeKernel:
    """Read a tabulated kernel: one value per line, line index is ``t``."""
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ConfigurationError(f"{path}:{lineno}: not a number: {line!r}") from None
    return tabulated(values)


def eval_kernel(kernel: RangeKernel, t):
    """Evaluate ``phi(|t|)``; accepts a scalar or an array.

    Tabulated kernels round ``|t|`` half-up to the nearest table index.
    """
    scalar = np.ndim(t) == 0
    at = np.abs(np.asarray(t, dtype=float))
    if kernel.family == "gaussian":
        out = np.exp(-(at**2) / (2.0 * kernel.sigma_r**2))
    elif kernel.family == "exponential":
        out = np.exp(-at / kernel.sigma_r)
    else:
        idx = np.floor(at + 0.5).astype(np.int64)
        if idx.size and idx.max() >= len(kernel.table):
            raise InputDomainError(
                f"|t| = {at.max():g} is outside the kernel table (0..{len(kernel.table) - 1})"
            )
        out = np.asarray(kernel.table)[idx]
    return float(out) if scalar else out
