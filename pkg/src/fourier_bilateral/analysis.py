"""Worst-case error bound and measured error for the approximate filter."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, fields

import numpy as np

from .errors import ConfigurationError, InputDomainError


def error_bound(T: int, epsilon: float, w0: float) -> float:
    """Bound ``2 T eps / (w0 - eps)`` on the l-infinity filtering error.

    Assumes the spatial weights sum to one and ``|phi - phi_N| <= eps`` on
    every attainable intensity difference.
    """
    if T < 0:
        raise ConfigurationError(f"T must be non-negative, got {T!r}")
    if epsilon < 0:
        raise ConfigurationError(f"epsilon must be non-negative, got {epsilon!r}")
    if epsilon >= w0:
        raise ConfigurationError(
            f"epsilon={epsilon:g} must be below the spatial center weight w0={w0:g}"
        )
    if T == 0:
        return 0.0
    return 2.0 * T * epsilon / (w0 - epsilon)


def linf_error(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise InputDomainError(f"image shapes differ: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


@dataclass(frozen=True)
class AccuracyReport:
    T: int
    epsilon_requested: float
    epsilon_achieved: float
    N: int | None
    w0: float
    predicted_bound: float
    measured_linf: float | None = None
    weaker_guarantee_flag: bool = False

    @property
    def within_bound(self) -> bool | None:
        if self.measured_linf is None:
            return None
        return self.measured_linf <= self.predicted_bound

    def to_text(self) -> str:
        """``key=value`` lines; absent values are written as ``none``."""
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            lines.append(f"{f.name}={_fmt(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AccuracyReport":
        raw = {}
        for line in text.splitlines():
            if line.strip():
                key, _, value = line.partition("=")
                raw[key.strip()] = value.strip()
        kw = {}
        for f in fields(cls):
            v = raw[f.name]
            if v == "none":
                kw[f.name] = None
            elif f.name in ("T", "N"):
                kw[f.name] = int(v)
            elif f.name == "weaker_guarantee_flag":
                kw[f.name] = v == "true"
            else:
                kw[f.name] = float(v)
        return cls(**kw)


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def reports_to_csv(reports, extra=None) -> str:
    """CSV table of reports, one row each; ``extra`` adds leading columns per row."""
    names = [f.name for f in fields(AccuracyReport)]
    extra = list(extra) if extra is not None else [{} for _ in reports]
    extra_keys = list(extra[0]) if extra else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(extra_keys + names)
    for rep, ex in zip(reports, extra):
        row = asdict(rep)
        writer.writerow([ex[k] for k in extra_keys] + [_fmt(row[n]) for n in names])
    return buf.getvalue()
